#include "hrpkit/config.hpp"
#include "hrpkit/errors.hpp"
#include "hrpkit/factorize.hpp"
#include "hrpkit/hrp.hpp"
#include "hrpkit/mdep.hpp"
#include "hrpkit/parse.hpp"
#include "hrpkit/survey.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using namespace hrpkit;
using nlohmann::json;

namespace {

std::string zeta_pretty(const RootOfUnity& z) {
    if (z.order == 1)
        return "1";
    if (z.order == 2)
        return "-1";
    if (z.order == 4)
        return z.power == 1 ? "i" : "-i";
    std::ostringstream os;
    os << "exp(2*pi*i*" << z.power << "/" << z.order << ")";
    return os.str();
}

std::string relation_pretty(const Relation& rel) {
    std::ostringstream num, den;
    for (std::size_t j = 0; j < rel.exponents.size(); ++j) {
        long k = rel.exponents[j];
        if (k == 0)
            continue;
        std::ostringstream& side = k > 0 ? num : den;
        if (side.tellp() > 0)
            side << "*";
        side << "a" << (j + 1);
        if (std::abs(k) != 1)
            side << "^" << std::abs(k);
    }
    std::string n = num.str().empty() ? "1" : num.str();
    std::string d = den.str();
    std::ostringstream os;
    os << n;
    if (!d.empty())
        os << "/(" << d << ")";
    os << " = " << zeta_pretty(rel.cofactor);
    return os.str();
}

json relation_json(const Relation& rel) {
    json j;
    j["exponents"] = rel.exponents;
    j["zeta"] = {{"order", rel.cofactor.order}, {"power", rel.cofactor.power}};
    j["two_pi_multiple"] = rel.two_pi_multiple;
    j["pretty"] = relation_pretty(rel);
    return j;
}

json report_json(const DependenceReport& rep) {
    json j;
    j["m_alpha"] = rep.m_alpha;
    j["independence_mode"] =
        rep.independence_mode == IndependenceMode::certified ? "certified" : "heuristic";
    json rels = json::array();
    for (const auto& r : rep.relations)
        rels.push_back(relation_json(r));
    j["relations"] = rels;
    if (rep.power_reducible) {
        j["power_reducible"] = {{"b", rep.power_reducible->first},
                                {"reduced_minpoly", rep.power_reducible->second.to_string()}};
    }
    if (!rep.diagnostics.empty())
        j["diagnostics"] = rep.diagnostics;
    return j;
}

json expansion_json(const DigitExpansion& e) {
    json j;
    json digits = json::array();
    for (const auto& d : e.digits)
        digits.push_back(d.get_str());
    j["digits"] = digits;
    j["digit_bound"] = e.digit_bound.get_str();
    j["base"] = e.base.to_string();
    return j;
}

void print_expansion(const DigitExpansion& e) {
    std::cout << "digits (ascending powers):";
    for (const auto& d : e.digits)
        std::cout << " " << d.get_str();
    std::cout << "\n";
    std::cout << "digit bound: " << e.digit_bound.get_str() << "\n";
}

int guarded_main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the height reducing property of algebraic numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    bool timing = false;
    app.add_flag("--json", as_json, "machine readable output");
    app.add_flag("--timing", timing, "print elapsed wall time to stderr");

    if (const char* env = std::getenv("HRP_PRECISION_BITS")) {
        long bits = std::strtol(env, nullptr, 10);
        if (bits > 0)
            set_default_start_bits(bits);
    }

    // survey
    auto* sv = app.add_subcommand("survey", "enumerate reciprocal polynomials and tabulate"
                                            " multiplicative dependences");
    int sv_d = 6, sv_c = 2, sv_h = 1;
    int sv_jobs = static_cast<int>(std::thread::hardware_concurrency());
    std::string sv_ckpt, sv_out;
    sv->add_option("--degree", sv_d, "even degree d")->required();
    sv->add_option("--lead", sv_c, "leading coefficient c >= 2")->required();
    sv->add_option("--height", sv_h, "coefficient height h >= 1")->required();
    sv->add_option("--jobs", sv_jobs, "worker threads");
    sv->add_option("--checkpoint", sv_ckpt, "checkpoint file (resume supported)");
    sv->add_option("--out", sv_out, "CSV output path");

    // mdep
    auto* md = app.add_subcommand("mdep", "multiplicative dependence analysis of the conjugates");
    std::string md_poly, md_bound_b;
    md->add_option("--poly", md_poly, "ascending coefficients c0,c1,...")->required();
    md->add_option("--bound-b", md_bound_b, "Waldschmidt-style exponent bound B");

    // classify
    auto* cl = app.add_subcommand("classify", "height reducing property classification");
    std::string cl_poly;
    cl->add_option("--poly", cl_poly, "ascending coefficients c0,c1,...")->required();

    // dominant
    auto* dm = app.add_subcommand("dominant", "construct a k-th dominant-term multiple");
    std::string dm_poly;
    long dm_k = 0;
    bool dm_strict = false;
    dm->add_option("--poly", dm_poly, "ascending coefficients c0,c1,...")->required();
    dm->add_option("--k", dm_k, "dominant index")->required();
    dm->add_flag("--strict", dm_strict, "require strict dominance");

    // reduce
    auto* rd = app.add_subcommand("reduce", "digit expansion of a ring element");
    std::string rd_poly, rd_value;
    long rd_khat = 8;
    rd->add_option("--poly", rd_poly, "base minimal polynomial")->required();
    rd->add_option("--value", rd_value, "element as integer polynomial in alpha")->required();
    rd->add_option("--khat", rd_khat, "alignment window for the unit-circle reducer");

    // verify
    auto* vf = app.add_subcommand("verify", "exact verification of a relation candidate");
    std::string vf_poly, vf_rel;
    vf->add_option("--poly", vf_poly, "ascending coefficients c0,c1,...")->required();
    vf->add_option("--relation", vf_rel, "exponents k1,k2,...")->required();

    CLI11_PARSE(app, argc, argv);

    auto t0 = std::chrono::steady_clock::now();
    auto report_time = [&]() {
        if (timing) {
            auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::cerr << "elapsed: " << dt << " ms\n";
        }
    };

    if (sv->parsed()) {
        SurveyOptions opt;
        opt.jobs = std::max(1, sv_jobs);
        opt.checkpoint_path = sv_ckpt;
        if (!sv_out.empty())
            opt.relation_log_path = sv_out + ".relations.json";
        SurveyRow row = run_survey(sv_d, sv_c, sv_h, opt);
        if (!sv_out.empty()) {
            std::ofstream out(sv_out);
            out << survey_csv_header() << "\n" << survey_csv_row(row) << "\n";
        }
        if (as_json) {
            json j;
            j["d"] = row.d;
            j["c"] = row.c;
            j["h"] = row.h;
            j["poly"] = row.poly.get_str();
            j["circle"] = row.circle;
            j["irred"] = row.irred;
            j["prim"] = row.prim;
            j["non_xm"] = row.non_xm;
            j["dep"] = row.dep;
            j["npr"] = row.npr;
            j["m1"] = row.m1;
            j["m2"] = row.m2;
            j["m3"] = row.m3;
            j["notes"] = row.notes;
            std::cout << j.dump(1) << "\n";
        } else {
            std::cout << survey_table({row});
            for (const auto& n : row.notes)
                std::cout << "# " << n << "\n";
        }
        report_time();
        return 0;
    }

    if (md->parsed()) {
        IntPoly p = parse_poly(md_poly);
        MdepConfig cfg;
        if (!md_bound_b.empty()) {
            cfg.schedule.waldschmidt_b = mpz_class(md_bound_b);
            cfg.schedule.b_supplied = true;
        }
        DependenceReport rep = m_alpha(p, cfg);
        if (as_json) {
            std::cout << report_json(rep).dump(1) << "\n";
        } else {
            std::cout << "m(alpha) = " << rep.m_alpha << " ("
                      << (rep.independence_mode == IndependenceMode::certified ? "certified"
                                                                               : "heuristic")
                      << " independence)\n";
            for (const auto& r : rep.relations)
                std::cout << "relation: " << relation_pretty(r) << "\n";
            if (rep.power_reducible)
                std::cout << "power-reducible: b = " << rep.power_reducible->first
                          << ", minimal polynomial of alpha^b = "
                          << rep.power_reducible->second.to_string() << "\n";
            for (const auto& dgn : rep.diagnostics)
                std::cout << "# " << dgn << "\n";
        }
        report_time();
        return 0;
    }

    if (cl->parsed()) {
        IntPoly p = parse_poly(cl_poly);
        std::vector<RootBox> boxes = isolate_roots(p, 32);
        HrpStatus st = classify_hrp(p, boxes.front());
        const char* kind = st.kind == HrpKind::RootOfUnity  ? "root-of-unity"
                           : st.kind == HrpKind::Expanding  ? "expanding"
                           : st.kind == HrpKind::UnitCircle ? "unit-circle"
                                                            : "mixed";
        const char* verdict = st.verdict == HrpVerdict::HRP_proven ? "hrp-proven"
                              : st.verdict == HrpVerdict::Unknown  ? "unknown"
                                                                   : "no-hrp";
        if (as_json) {
            json j;
            j["kind"] = kind;
            j["verdict"] = verdict;
            if (st.kind == HrpKind::UnitCircle) {
                j["m_alpha"] = st.m_alpha;
                if (st.report)
                    j["report"] = report_json(*st.report);
            }
            std::cout << j.dump(1) << "\n";
        } else {
            std::cout << "class: " << kind << "\n";
            std::cout << "height reducing property: " << verdict << "\n";
            if (st.kind == HrpKind::UnitCircle)
                std::cout << "m(alpha) = " << st.m_alpha << "\n";
        }
        report_time();
        return 0;
    }

    if (dm->parsed()) {
        IntPoly p = parse_poly(dm_poly);
        IntPoly r = construct_dominant(p, dm_k, dm_strict);
        if (as_json) {
            json j;
            j["poly"] = r.to_string();
            j["k"] = dm_k;
            j["strict"] = dm_strict;
            std::cout << j.dump(1) << "\n";
        } else {
            std::cout << r.to_string() << "\n";
        }
        report_time();
        return 0;
    }

    if (rd->parsed()) {
        IntPoly p = parse_poly(rd_poly);
        IntPoly value = rd_value == "0" ? IntPoly() : parse_poly(rd_value);
        std::vector<RootBox> boxes = isolate_roots(p, 32);
        HrpStatus st = classify_hrp(p, boxes.front());
        std::optional<DigitExpansion> e;
        if (st.kind == HrpKind::Expanding) {
            e = reduce_expanding(p, boxes.front(), value);
        } else if (st.kind == HrpKind::RootOfUnity) {
            long n = *cyclotomic_order(normalized_primitive(p));
            e = reduce_root_of_unity(n, value);
        } else if (st.kind == HrpKind::UnitCircle) {
            UnitCircleConfig cfg;
            cfg.khat = rd_khat;
            e = reduce_unit_circle(p, boxes.front(), value, cfg);
            if (!e) {
                std::cerr << "reduction did not terminate within the configured budget\n";
                return 2;
            }
        } else {
            std::cerr << "no height reducing property: conjugates are neither all unimodular "
                         "nor all expanding\n";
            return 1;
        }
        if (as_json)
            std::cout << expansion_json(*e).dump(1) << "\n";
        else
            print_expansion(*e);
        report_time();
        return 0;
    }

    if (vf->parsed()) {
        IntPoly p = parse_poly(vf_poly);
        IntPoly kvec = parse_poly(vf_rel); // reuse the integer-list parser
        std::vector<long> k;
        for (const auto& v : kvec.coeffs()) {
            if (!v.fits_slong_p())
                throw std::invalid_argument("relation exponent out of range");
            k.push_back(v.get_si());
        }
        ConjugateSystem sys(p, 64);
        while (k.size() < sys.count())
            k.push_back(0);
        if (k.size() != sys.count())
            throw std::invalid_argument("relation length exceeds the number of upper-half roots");
        MdepConfig cfg;
        std::string note;
        auto rel = verify_relation_with_system(sys, k, cfg, &note);
        if (as_json) {
            json j;
            j["verified"] = bool(rel);
            if (rel)
                j["relation"] = relation_json(*rel);
            else
                j["witness"] = note;
            std::cout << j.dump(1) << "\n";
        } else {
            if (rel)
                std::cout << "verified: " << relation_pretty(*rel) << "\n";
            else
                std::cout << "not a relation (" << note << ")\n";
        }
        report_time();
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return guarded_main(argc, argv);
    } catch (const limit_error& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return 2;
    } catch (const precision_error& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
