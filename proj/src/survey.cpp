#include "hrpkit/survey.hpp"

#include "hrpkit/errors.hpp"
#include "hrpkit/factorize.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hrpkit {

namespace {

using nlohmann::json;

bool quick_circle_reject(const IntPoly& g, int m) {
    // all m roots real in [-2, 2] forces these end signs
    int lcs = sgn(g.lc());
    mpz_class at2 = g.eval_z(2);
    if (sgn(at2) * lcs < 0)
        return true;
    mpz_class atm2 = g.eval_z(-2);
    int want = (m % 2 == 0) ? lcs : -lcs;
    if (sgn(atm2) * want < 0)
        return true;
    return false;
}

} // namespace

CandidateVerdict classify_candidate(const HalfCoeffs& h, const MdepConfig& cfg) {
    CandidateVerdict v;
    IntPoly g = trace_poly(h);
    if (quick_circle_reject(g, h.d / 2))
        return v; // NotCircle
    if (!all_roots_on_circle(h))
        return v;
    IntPoly p = expand_reciprocal(h);
    if (!is_irreducible(p)) {
        v.stage = Stage::NotIrreducible;
        return v;
    }
    if (content_and_primitive(p).first != 1) {
        v.stage = Stage::NotPrimitive;
        return v;
    }
    if (detect_composed_power(p)) {
        v.stage = Stage::ComposedPower;
        return v;
    }
    ConjugateSystem sys(p, 64);
    DependenceReport rep = analyze_dependences(sys, cfg, true);
    v.m_alpha = rep.m_alpha;
    if (rep.m_alpha == h.d / 2) {
        v.stage = Stage::Independent;
    } else if (rep.power_reducible) {
        v.stage = Stage::PowerReducible;
    } else {
        v.stage = Stage::Dependent;
    }
    v.report = std::move(rep);
    return v;
}

namespace {

struct DepLogEntry {
    long block = 0;
    std::vector<long> half; // c_1..c_{d/2}
    Stage stage = Stage::Dependent;
    int m_alpha = 0;
    std::vector<Relation> relations;
    std::optional<std::pair<long, IntPoly>> power_reducible;
};

struct BlockResult {
    long counters[10] = {0}; // circle..m3 packed below
    std::vector<DepLogEntry> entries;
    bool done = false;
};

enum CounterIx { kCircle = 0, kIrred, kPrim, kNonXm, kDep, kNpr, kM1, kM2, kM3, kPoly };

void tally(BlockResult& r, const CandidateVerdict& v, int d) {
    ++r.counters[kPoly];
    if (v.stage == Stage::NotCircle)
        return;
    ++r.counters[kCircle];
    if (v.stage == Stage::NotIrreducible)
        return;
    ++r.counters[kIrred];
    if (v.stage == Stage::NotPrimitive)
        return;
    ++r.counters[kPrim];
    if (v.stage == Stage::ComposedPower)
        return;
    ++r.counters[kNonXm];
    if (v.stage == Stage::Independent)
        return;
    ++r.counters[kDep];
    if (v.stage == Stage::PowerReducible)
        return;
    ++r.counters[kNpr];
    int miss = d / 2 - v.m_alpha;
    if (miss == 1)
        ++r.counters[kM1];
    else if (miss == 2)
        ++r.counters[kM2];
    else if (miss == 3)
        ++r.counters[kM3];
}

json relation_to_json(const Relation& rel) {
    json j;
    j["exponents"] = rel.exponents;
    j["zeta_order"] = rel.cofactor.order;
    j["zeta_power"] = rel.cofactor.power;
    j["two_pi_multiple"] = rel.two_pi_multiple;
    return j;
}

json entry_to_json(const DepLogEntry& e, int d, int c) {
    json j;
    j["degree"] = d;
    j["lead"] = c;
    j["half_coeffs"] = e.half;
    j["stage"] = e.stage == Stage::PowerReducible ? "power_reducible" : "dependent";
    j["m_alpha"] = e.m_alpha;
    json rels = json::array();
    for (const auto& r : e.relations)
        rels.push_back(relation_to_json(r));
    j["relations"] = rels;
    if (e.power_reducible) {
        j["power_b"] = e.power_reducible->first;
        j["reduced_minpoly"] = e.power_reducible->second.to_string();
    }
    return j;
}

// odometer over (c_1..c_m) with the first `fixed` coordinates pinned
struct Odometer {
    int m, h;
    std::vector<long> v;
    bool first = true;

    Odometer(int m_, int h_, const std::vector<long>& pin) : m(m_), h(h_) {
        v.assign(static_cast<std::size_t>(m), -h);
        for (std::size_t i = 0; i < pin.size(); ++i)
            v[i] = pin[i];
    }
    // advance coordinates beyond the pinned prefix; returns false when done
    bool next(std::size_t fixed) {
        for (std::size_t i = v.size(); i-- > fixed;) {
            if (v[i] < h) {
                ++v[i];
                for (std::size_t j = i + 1; j < v.size(); ++j)
                    v[j] = -h;
                return true;
            }
        }
        return false;
    }
};

struct CheckpointData {
    std::set<long> blocks_done;
    std::vector<BlockResult> results;
};

void write_checkpoint(const std::string& path, int d, int c, int h, long blocks_total,
                      const std::vector<BlockResult>& results) {
    if (path.empty())
        return;
    json j;
    j["version"] = 1;
    j["d"] = d;
    j["c"] = c;
    j["h"] = h;
    j["blocks_total"] = blocks_total;
    json done = json::array();
    json counters = json::array();
    json entries = json::array();
    for (long b = 0; b < blocks_total; ++b) {
        if (!results[static_cast<std::size_t>(b)].done)
            continue;
        done.push_back(b);
        json cj = json::array();
        for (long v : results[static_cast<std::size_t>(b)].counters)
            cj.push_back(v);
        counters.push_back(cj);
        for (const auto& e : results[static_cast<std::size_t>(b)].entries) {
            json ej = entry_to_json(e, d, c);
            ej["block"] = e.block;
            json halfj = e.half;
            ej["half_coeffs"] = halfj;
            entries.push_back(ej);
        }
    }
    j["blocks_done"] = done;
    j["block_counters"] = counters;
    j["entries"] = entries;
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(1);
    }
    std::rename(tmp.c_str(), path.c_str());
}

bool load_checkpoint(const std::string& path, int d, int c, int h, long blocks_total,
                     std::vector<BlockResult>& results) {
    if (path.empty())
        return false;
    std::ifstream in(path);
    if (!in.good())
        return false;
    json j;
    try {
        in >> j;
    } catch (...) {
        return false;
    }
    if (j.value("version", 0) != 1 || j.value("d", -1) != d || j.value("c", -1) != c ||
        j.value("h", -1) != h || j.value("blocks_total", -1L) != blocks_total)
        return false;
    auto done = j.at("blocks_done");
    auto counters = j.at("block_counters");
    for (std::size_t i = 0; i < done.size(); ++i) {
        long b = done[i].get<long>();
        if (b < 0 || b >= blocks_total)
            return false;
        BlockResult& r = results[static_cast<std::size_t>(b)];
        r.done = true;
        for (int t = 0; t < 10; ++t)
            r.counters[t] = counters[i][static_cast<std::size_t>(t)].get<long>();
    }
    if (j.contains("entries")) {
        for (const auto& ej : j.at("entries")) {
            DepLogEntry e;
            e.block = ej.value("block", 0L);
            for (const auto& x : ej.at("half_coeffs"))
                e.half.push_back(x.get<long>());
            e.stage = ej.value("stage", "") == "power_reducible" ? Stage::PowerReducible
                                                                 : Stage::Dependent;
            e.m_alpha = ej.value("m_alpha", 0);
            if (ej.contains("power_b")) {
                // reduced minpoly is reparsed from its canonical coefficient string
                std::vector<mpz_class> cs;
                std::stringstream ss(ej.value("reduced_minpoly", std::string()));
                std::string tok;
                while (std::getline(ss, tok, ','))
                    cs.emplace_back(tok);
                e.power_reducible = std::make_pair(ej.value("power_b", 0L), IntPoly(cs));
            }
            for (const auto& rj : ej.at("relations")) {
                Relation rel;
                for (const auto& x : rj.at("exponents"))
                    rel.exponents.push_back(x.get<long>());
                rel.cofactor.order = rj.value("zeta_order", 1L);
                rel.cofactor.power = rj.value("zeta_power", 0L);
                rel.two_pi_multiple = rj.value("two_pi_multiple", 0L);
                e.relations.push_back(std::move(rel));
            }
            if (e.block >= 0 && e.block < blocks_total &&
                results[static_cast<std::size_t>(e.block)].done)
                results[static_cast<std::size_t>(e.block)].entries.push_back(std::move(e));
        }
    }
    return true;
}

} // namespace

SurveyRow run_survey(int d, int c, int h, const SurveyOptions& opt) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("survey: degree must be even and >= 2");
    if (c < 2)
        throw std::invalid_argument("survey: leading coefficient must be >= 2");
    if (h < 1)
        throw std::invalid_argument("survey: height must be >= 1");
    const int m = d / 2;
    const long width = 2L * h + 1;

    // blocks over the first one or two coordinates
    const int block_coords = (m >= 3 && width < 32) ? 2 : 1;
    const long blocks_total = block_coords == 2 ? width * width : width;

    std::vector<BlockResult> results(static_cast<std::size_t>(blocks_total));
    load_checkpoint(opt.checkpoint_path, d, c, h, blocks_total, results);

    std::atomic<long> next_block{0};
    std::mutex ckpt_mutex;
    std::atomic<bool> failed{false};
    std::string failure;

    auto worker = [&]() {
        while (!failed.load()) {
            long b = next_block.fetch_add(1);
            if (b >= blocks_total)
                return;
            if (results[static_cast<std::size_t>(b)].done)
                continue;
            BlockResult local;
            std::vector<long> pin;
            if (block_coords == 2)
                pin = {b / width - h, b % width - h};
            else
                pin = {b - h};
            if (static_cast<int>(pin.size()) > m)
                pin.resize(static_cast<std::size_t>(m));
            try {
                Odometer od(m, h, pin);
                do {
                    std::vector<mpz_class> half;
                    half.reserve(static_cast<std::size_t>(m) + 1);
                    half.emplace_back(c);
                    for (long x : od.v)
                        half.emplace_back(x);
                    HalfCoeffs hc(d, std::move(half));
                    CandidateVerdict verdict;
                    try {
                        verdict = classify_candidate(hc, opt.mdep);
                    } catch (const std::exception& ex) {
                        std::ostringstream os;
                        os << "candidate (c_1..c_m) = (";
                        for (std::size_t i = 0; i < od.v.size(); ++i)
                            os << (i ? "," : "") << od.v[i];
                        os << "): " << ex.what();
                        throw limit_error(os.str());
                    }
                    tally(local, verdict, d);
                    if (verdict.stage == Stage::Dependent ||
                        verdict.stage == Stage::PowerReducible) {
                        DepLogEntry e;
                        e.block = b;
                        e.half = od.v;
                        e.stage = verdict.stage;
                        e.m_alpha = verdict.m_alpha;
                        if (verdict.report) {
                            e.relations = verdict.report->relations;
                            e.power_reducible = verdict.report->power_reducible;
                        }
                        local.entries.push_back(std::move(e));
                    }
                } while (od.next(pin.size()));
            } catch (const std::exception& ex) {
                failed.store(true);
                std::lock_guard<std::mutex> lk(ckpt_mutex);
                std::ostringstream os;
                os << "block " << b << ": " << ex.what();
                failure = os.str();
                return;
            }
            local.done = true;
            {
                std::lock_guard<std::mutex> lk(ckpt_mutex);
                results[static_cast<std::size_t>(b)] = std::move(local);
                write_checkpoint(opt.checkpoint_path, d, c, h, blocks_total, results);
            }
        }
    };

    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failed.load())
        throw limit_error("survey aborted (partial checkpoint retained): " + failure);

    SurveyRow row;
    row.d = d;
    row.c = c;
    row.h = h;
    std::vector<DepLogEntry> all_entries;
    for (long b = 0; b < blocks_total; ++b) {
        const BlockResult& r = results[static_cast<std::size_t>(b)];
        row.poly += r.counters[kPoly];
        row.circle += r.counters[kCircle];
        row.irred += r.counters[kIrred];
        row.prim += r.counters[kPrim];
        row.non_xm += r.counters[kNonXm];
        row.dep += r.counters[kDep];
        row.npr += r.counters[kNpr];
        row.m1 += r.counters[kM1];
        row.m2 += r.counters[kM2];
        row.m3 += r.counters[kM3];
        for (const auto& e : r.entries)
            all_entries.push_back(e);
    }
    std::sort(all_entries.begin(), all_entries.end(),
              [](const DepLogEntry& a, const DepLogEntry& b) { return a.half < b.half; });

    // the npr partition must be exhaustive on observed data
    if (row.m1 + row.m2 + row.m3 != row.npr)
        row.notes.push_back("npr partition incomplete: a case with m(alpha) < d/2 - 3 occurred");

    if (d == 10 && c == 3 && h == 6)
        row.notes.push_back("poly = 13^5 = 371293; the circulated reference value 372193 for "
                            "this cell contradicts the enumeration size (suspected typo)");

    // +- pairing: x -> -x closes the dependent set for even degree
    {
        std::set<std::vector<long>> depset;
        for (const auto& e : all_entries)
            depset.insert(e.half);
        bool ok = true;
        for (const auto& t : depset) {
            std::vector<long> alt(t);
            for (std::size_t i = 0; i < alt.size(); ++i)
                if ((i + 1) % 2 == 1) // c_j multiplies x^j with j odd after c_0
                    alt[i] = -alt[i];
            if (!depset.count(alt))
                ok = false;
        }
        row.notes.push_back(ok ? "pairing check: dep set closed under x -> -x"
                               : "pairing check FAILED: dep set not closed under x -> -x");
    }

    if (!opt.relation_log_path.empty()) {
        json arr = json::array();
        for (const auto& e : all_entries)
            arr.push_back(entry_to_json(e, d, c));
        std::ofstream out(opt.relation_log_path);
        out << arr.dump(1) << "\n";
    }
    return row;
}

std::string survey_csv_header() { return "d,c,h,poly,circle,irred,prim,non x^m,dep,npr,-1,-2,-3"; }

std::string survey_csv_row(const SurveyRow& r) {
    std::ostringstream os;
    os << r.d << ',' << r.c << ',' << r.h << ',' << r.poly.get_str() << ',' << r.circle << ','
       << r.irred << ',' << r.prim << ',' << r.non_xm << ',' << r.dep << ',' << r.npr << ','
       << r.m1 << ',' << r.m2 << ',' << r.m3;
    return os.str();
}

std::string survey_table(const std::vector<SurveyRow>& rows) {
    std::ostringstream os;
    const char* heads[] = {"d",   "c",   "h",  "poly", "circle", "irred", "prim",
                           "non x^m", "dep", "npr", "-1", "-2", "-3"};
    std::vector<std::vector<std::string>> cells;
    cells.emplace_back(std::begin(heads), std::end(heads));
    for (const auto& r : rows) {
        std::vector<std::string> c;
        auto add = [&](auto v) {
            std::ostringstream t;
            t << v;
            c.push_back(t.str());
        };
        add(r.d);
        add(r.c);
        add(r.h);
        c.push_back(r.poly.get_str());
        add(r.circle);
        add(r.irred);
        add(r.prim);
        add(r.non_xm);
        add(r.dep);
        add(r.npr);
        add(r.m1);
        add(r.m2);
        add(r.m3);
        cells.push_back(std::move(c));
    }
    std::vector<std::size_t> w(cells[0].size(), 0);
    for (const auto& rowc : cells)
        for (std::size_t i = 0; i < rowc.size(); ++i)
            w[i] = std::max(w[i], rowc[i].size());
    for (const auto& rowc : cells) {
        for (std::size_t i = 0; i < rowc.size(); ++i) {
            os << std::string(w[i] - rowc[i].size(), ' ') << rowc[i];
            os << (i + 1 == rowc.size() ? "\n" : "  ");
        }
    }
    return os.str();
}

} // namespace hrpkit
