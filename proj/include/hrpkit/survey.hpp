#ifndef HRPKIT_SURVEY_HPP
#define HRPKIT_SURVEY_HPP

#include "hrpkit/cheb.hpp"
#include "hrpkit/mdep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hrpkit {

/// One (d, c, h) cell of the dependency table.
struct SurveyRow {
    int d = 0, c = 0, h = 0;
    mpz_class poly = 0;
    long circle = 0, irred = 0, prim = 0, non_xm = 0;
    long dep = 0, npr = 0, m1 = 0, m2 = 0, m3 = 0;
    std::vector<std::string> notes; // e.g. pairing-check results, npr overflow cases
};

enum class Stage {
    NotCircle,
    NotIrreducible,
    NotPrimitive,
    ComposedPower,
    Independent,
    PowerReducible,
    Dependent
};

struct CandidateVerdict {
    Stage stage = Stage::NotCircle;
    int m_alpha = -1; // set for Independent/PowerReducible/Dependent
    std::optional<DependenceReport> report;
};

CandidateVerdict classify_candidate(const HalfCoeffs& h,
                                    const MdepConfig& cfg = MdepConfig::defaults());

struct SurveyOptions {
    int jobs = 1;
    std::string checkpoint_path;   // enables resume when non-empty
    std::string relation_log_path; // JSON sidecar with dep/npr relations
    MdepConfig mdep = MdepConfig::defaults();
};

SurveyRow run_survey(int d, int c, int h, const SurveyOptions& opt = SurveyOptions{});

std::string survey_csv_header();
std::string survey_csv_row(const SurveyRow& row);
std::string survey_table(const std::vector<SurveyRow>& rows);

} // namespace hrpkit

#endif
