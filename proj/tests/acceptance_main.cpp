// Acceptance suite: one line per criterion, nonzero exit on any failure.
// All thresholds are fixed here; nothing is deferred to runtime calibration.

#include "mirrorlat/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace mirrorlat;
namespace fs = std::filesystem;

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("MIRRORLAT_DATA_DIR")) return env;
    return MIRRORLAT_DATA_DIR;
}

int g_failures = 0;

void criterion(int number, const std::string& name, bool ok, const std::string& detail) {
    std::cout << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// criterion 5a oracle: exhaustive automorphism search, dicompare style.
// Enumerates every group automorphism (generator images with exact orders
// and full span growth; no q-based pruning) and tests the q/b transport.

struct AutOracle {
    const FiniteQuadraticForm& q1;
    const FiniteQuadraticForm& q2;
    long long nodes = 0;
    long long max_nodes;
    std::vector<std::vector<Int>> elements2;
    std::vector<std::vector<Int>> chosen;
    std::set<std::vector<Int>> span;

    AutOracle(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, long long cap)
        : q1(a), q2(b), max_nodes(cap) {}

    static std::vector<Int> add(const FiniteQuadraticForm& q, const std::vector<Int>& a,
                                const std::vector<Int>& b) {
        std::vector<Int> c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = mod_floor(a[i] + b[i], q.orders[i]);
        return c;
    }

    bool grow_span(const std::vector<Int>& x, const Int& needed) {
        std::set<std::vector<Int>> bigger;
        Int ord = element_order(q2, x);
        std::vector<Int> tx(x.size(), 0);
        for (Int t = 0; t < ord; ++t) {
            for (const auto& s : span) bigger.insert(add(q2, s, tx));
            tx = add(q2, tx, x);
        }
        if (Int(long(bigger.size())) != needed) return false;
        span.swap(bigger);
        return true;
    }

    bool transport_ok() {
        int k = q1.generators();
        for (int i = 0; i < k; ++i) {
            std::vector<Int> ei(k, 0);
            ei[i] = 1;
            if (q_value(q2, chosen[i]) != q_value(q1, ei)) return false;
            for (int j = 0; j < i; ++j) {
                std::vector<Int> ej(k, 0);
                ej[j] = 1;
                if (b_value(q2, chosen[i], chosen[j]) != b_value(q1, ei, ej)) return false;
            }
        }
        return true;
    }

    bool rec(int depth) {
        if (depth == q1.generators()) return transport_ok();
        Int needed = 1;
        for (int j = 0; j <= depth; ++j) needed *= q1.orders[j];
        for (const auto& x : elements2) {
            if (++nodes > max_nodes) throw budget_error("oracle exceeded its node budget");
            if (element_order(q2, x) != q1.orders[depth]) continue;
            auto saved = span;
            if (!grow_span(x, needed)) {
                span = std::move(saved);
                continue;
            }
            chosen.push_back(x);
            if (rec(depth + 1)) return true;
            chosen.pop_back();
            span = std::move(saved);
        }
        return false;
    }
};

// Independent verdict on a pair. Negative verdicts come from the counting
// argument (a q-preserving bijection permutes elements within q-value
// classes) or, when counts agree, from exhausting every automorphism.
// Positive implementation verdicts are checked by validating the witness
// mapping element by element.
enum class OracleVerdict { Isomorphic, NotIsomorphic };

OracleVerdict oracle_verdict(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                             bool impl_says_yes, const SearchBudget& budget) {
    if (a.orders != b.orders) return OracleVerdict::NotIsomorphic;
    if (a.trivial()) return OracleVerdict::Isomorphic;
    std::map<Rat, long> ca, cb;
    for (const auto& e : all_elements(a)) ++ca[q_value(a, e)];
    for (const auto& e : all_elements(b)) ++cb[q_value(b, e)];
    if (ca != cb) return OracleVerdict::NotIsomorphic;
    if (impl_says_yes) {
        // validate the witness independently: well-defined, bijective, and
        // q-transporting over every element (b is determined by q)
        auto w = isomorphism_witness(a, b, budget);
        if (!w) throw error("implementation said yes but produced no witness");
        int k = a.generators();
        std::set<std::vector<Int>> image;
        bool ok = true;
        std::vector<Int> cursor(k, 0);
        for (;;) {
            std::vector<Int> mapped(k, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    mapped[j] = mod_floor(mapped[j] + cursor[i] * (*w)[i][j], b.orders[j]);
            image.insert(mapped);
            if (q_value(b, mapped) != q_value(a, cursor)) ok = false;
            int i = k - 1;
            while (i >= 0) {
                cursor[i] += 1;
                if (cursor[i] < a.orders[i]) break;
                cursor[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
        if (Int(long(image.size())) != group_order(a)) ok = false;
        if (!ok) throw error("implementation produced an invalid witness");
        return OracleVerdict::Isomorphic;
    }
    // fingerprints agree but the implementation says no: exhaust Aut(A)
    AutOracle o(a, b, 500000000);
    o.elements2 = all_elements(b);
    o.span.insert(std::vector<Int>(b.generators(), 0));
    return o.rec(0) ? OracleVerdict::Isomorphic : OracleVerdict::NotIsomorphic;
}

// all block multisets with group order <= bound
std::vector<std::vector<GeneratorBlock>> block_pool(long bound) {
    std::vector<std::pair<GeneratorBlock, long>> blocks;
    for (int k = 1; (1L << k) <= bound; ++k) {
        std::vector<int> epss = k == 1 ? std::vector<int>{1, -1} : std::vector<int>{1, -1, 5, -5};
        for (int eps : epss) blocks.push_back({{'w', 2, k, eps}, 1L << k});
    }
    for (int k = 1; (1L << (2 * k)) <= bound; ++k) {
        blocks.push_back({{'u', 2, k, 0}, 1L << (2 * k)});
        blocks.push_back({{'v', 2, k, 0}, 1L << (2 * k)});
    }
    for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
        long pk = p;
        for (int k = 1; pk <= bound; ++k, pk *= p)
            for (int eps : {1, -1}) blocks.push_back({{'w', Int(p), k, eps}, pk});
    }
    std::vector<std::vector<GeneratorBlock>> out;
    std::vector<GeneratorBlock> cur;
    std::function<void(size_t, long)> rec = [&](size_t from, long left) {
        if (!cur.empty()) out.push_back(cur);
        for (size_t i = from; i < blocks.size(); ++i) {
            if (blocks[i].second > left) continue;
            cur.push_back(blocks[i].first);
            rec(i, left / blocks[i].second);
            cur.pop_back();
        }
    };
    rec(0, bound);
    return out;
}

// ---------------------------------------------------------------------------

void criterion1(const Dataset& data) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = verify_table1(data);
    double dt = seconds_since(t0);
    bool ok = rep.ok() && rep.rows.size() == 23 && dt < 1.0;
    std::ostringstream os;
    os << rep.rows.size() << " named lattices, " << rep.passed_checks() << " exact checks in "
       << dt << " s";
    if (!rep.ok()) os << "; " << rep.failed_checks() << " failed";
    criterion(1, "Table 1 conformance", ok, os.str());
}

VerificationReport criterion2(const Dataset& data) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = verify_mirrors(data);
    double dt = seconds_since(t0);
    int pair_checks = 0;
    bool pairs_ok = true;
    for (const auto& row : rep.rows)
        for (const auto& c : row.checks) {
            if (c.name.rfind("rank_sum_ok", 0) == 0 || c.name.rfind("form_mirror_ok", 0) == 0) {
                ++pair_checks;
                pairs_ok = pairs_ok && c.ok;
            }
        }
    bool ok = pairs_ok && pair_checks == 2 * 126 && dt < 10.0;
    std::ostringstream os;
    os << pair_checks << " rank/form obligations over 126 (row, subgroup) entries in " << dt
       << " s";
    criterion(2, "main theorem across the order-m tables", ok, os.str());
    return rep;
}

void criterion3(const VerificationReport& mirrors) {
    // quasihomogeneity is enforced by the polynomial parser inside each row;
    // here the transpose, duality-law and J/SL checks must all have passed
    int laws = 0;
    bool ok = true;
    for (const auto& row : mirrors.rows)
        for (const auto& c : row.checks) {
            if (c.name == "dual_weights_ok" || c.name == "dual_polynomial_ok" ||
                c.name == "duality_law_ok" || c.name == "jw_dual_is_sl" ||
                c.name.rfind("dual_group_order_ok", 0) == 0 ||
                c.name.rfind("dual_subgroup_ok", 0) == 0) {
                ++laws;
                ok = ok && c.ok;
            }
        }
    std::ostringstream os;
    os << laws << " transpose/dual-group law checks";
    criterion(3, "BHK algebra laws on all bundled polynomials", ok && laws > 0, os.str());
}

void criterion4(const Dataset& data) {
    bool ok = true;
    std::ostringstream os;
    SearchBudget budget;
    auto run = [&](const std::string& id, const std::function<bool(const OrbitLatticeResult&,
                                                                   const CurveConfig&)>& extra) {
        for (const auto& spec : data.geometry) {
            if (spec.id != id) continue;
            VerificationReport rep = verify_geometry(data, id);
            bool this_ok = rep.ok();
            CurveConfig config = load_curve_config(data.base_dir + "/" + spec.config_path);
            OrbitLatticeResult res = orbit_lattice(config);
            this_ok = this_ok && extra(res, config);
            if (!this_ok) os << id << " failed; ";
            ok = ok && this_ok;
            return;
        }
        ok = false;
        os << id << " missing; ";
    };
    run("method1-12b", [&](const OrbitLatticeResult& res, const CurveConfig&) {
        return res.r == 4 &&
               forms_isomorphic(discriminant_form(res.lattice), parse_form("w(3,1,1)"), budget) &&
               isotropic_subgroups(discriminant_form(res.lattice), budget).size() == 1 &&
               find_lattice_by_invariants(invariants_of(res.lattice), default_lattice_catalog(), 4,
                                          budget) == std::optional<std::string>("U+A2");
    });
    run("method2-43a", [&](const OrbitLatticeResult& res, const CurveConfig&) {
        Lattice expect = parse_lattice("U+E6+E8");
        return res.r == 16 && res.lattice.t_plus == expect.t_plus &&
               res.lattice.t_minus == expect.t_minus &&
               forms_isomorphic(discriminant_form(res.lattice), discriminant_form(expect), budget);
    });
    run("method3-37b", [&](const OrbitLatticeResult& res, const CurveConfig&) {
        return res.r == 9 && res.lattice.gram == parse_lattice("T(3,4,4)").gram &&
               forms_isomorphic(discriminant_form(res.lattice), parse_form("w(2,3,5)"), budget);
    });
    run("method4-37b-sl", [&](const OrbitLatticeResult& res, const CurveConfig&) {
        if (res.r != 11) return false;
        if (!forms_isomorphic(discriminant_form(res.lattice), parse_form("w(2,3,-5)"), budget))
            return false;
        // the U+E8+A1 candidate dies by the length-versus-rank nonexistence test
        EmbeddingObstruction ob =
            primitive_embedding_obstruction(invariants_of(parse_lattice("U+E8+A1")),
                                            invariants_of(parse_lattice("U(2)+D4+E8")), budget);
        LatticeInvariants kinv{0, 3, parse_form("u+v+w(2,1,1)")};
        return ob.forced_trivial && !ob.embeds() && !exists_necessary(kinv, budget);
    });
    run("method4-18a", [&](const OrbitLatticeResult& res, const CurveConfig&) {
        if (res.r != 12) return false;
        FiniteQuadraticForm q = discriminant_form(res.lattice);
        if (!forms_isomorphic(q, parse_form("w(3,1,1)+w(3,2,1)"), budget)) return false;
        return isotropic_subgroups(q, budget).size() == 2;  // exactly one nontrivial
    });
    criterion(4, "worked-example pipelines", ok, os.str());
}

void criterion5(const Dataset&) {
    SearchBudget budget;
    // (a) isomorphism decision vs exhaustive automorphism search, |A| <= 64
    bool a_ok = true;
    long a_pairs = 0;
    std::string a_note;
    try {
        auto pool = block_pool(64);
        std::map<std::vector<Int>, std::vector<FiniteQuadraticForm>> by_orders;
        std::set<std::string> seen;
        for (const auto& blocks : pool) {
            FiniteQuadraticForm q = blocks_form(blocks);
            std::ostringstream key;
            for (const auto& d : q.orders) key << d << ",";
            key << "|" << to_string(q.gram);
            if (!seen.insert(key.str()).second) continue;
            by_orders[q.orders].push_back(q);
        }
        std::mt19937 rng(20240915);
        for (auto& [orders, forms] : by_orders) {
            for (size_t i = 0; i < forms.size() && a_ok; ++i) {
                // partners: itself plus up to 6 random classmates
                std::vector<size_t> js = {i};
                for (int t = 0; t < 6 && forms.size() > 1; ++t) js.push_back(rng() % forms.size());
                for (size_t j : js) {
                    bool impl = forms_isomorphic(forms[i], forms[j], budget);
                    OracleVerdict orac = oracle_verdict(forms[i], forms[j], impl, budget);
                    ++a_pairs;
                    if (impl != (orac == OracleVerdict::Isomorphic)) {
                        a_ok = false;
                        a_note = "disagreement on " + print_form(forms[i], budget) + " vs " +
                                 print_form(forms[j], budget);
                        break;
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        a_ok = false;
        a_note = e.what();
    }

    // (b) isotropic subgroup count vs brute-force even superlattice search
    bool b_ok = true;
    int b_cases = 0;
    std::string b_note;
    try {
        std::mt19937 rng(5150);
        std::uniform_int_distribution<int> dim(1, 3), diag(-3, 3), off(-2, 2);
        while (b_cases < 15) {
            int n = dim(rng);
            IntMat g(n, n);
            for (int i = 0; i < n; ++i) {
                g(i, i) = 2 * diag(rng);
                for (int j = i + 1; j < n; ++j) g(i, j) = g(j, i) = off(rng);
            }
            Int d = det(g);
            if (d == 0 || abs(d) > 36) continue;
            Lattice l = make_lattice(g);
            FiniteQuadraticForm q = discriminant_form(l);
            // brute force: every subgroup of A_L, lifted; count even integral Grams
            auto elems = all_elements(q);
            SmithDecomposition dec = smith_normal_form(l.gram);
            std::vector<Int> divisors;
            std::vector<int> cols;
            for (int i = 0; i < n; ++i)
                if (dec.s(i, i) != 1) {
                    divisors.push_back(dec.s(i, i));
                    cols.push_back(i);
                }
            auto add = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
                std::vector<Int> z(x.size());
                for (size_t t = 0; t < x.size(); ++t) z[t] = mod_floor(x[t] + y[t], q.orders[t]);
                return z;
            };
            std::set<std::set<std::vector<Int>>> subgroups;
            std::set<std::vector<Int>> trivial = {std::vector<Int>(q.generators(), 0)};
            subgroups.insert(trivial);
            std::vector<std::set<std::vector<Int>>> frontier = {trivial};
            while (!frontier.empty()) {
                std::vector<std::set<std::vector<Int>>> next;
                for (const auto& grp : frontier)
                    for (const auto& x : elems) {
                        if (grp.count(x)) continue;
                        auto bigger = grp;
                        std::vector<std::vector<Int>> queue = {x};
                        bigger.insert(x);
                        while (!queue.empty()) {
                            auto cur = queue.back();
                            queue.pop_back();
                            std::vector<std::vector<Int>> snap(bigger.begin(), bigger.end());
                            for (const auto& y : snap) {
                                auto z = add(cur, y);
                                if (bigger.insert(z).second) queue.push_back(z);
                            }
                        }
                        if (subgroups.insert(bigger).second) next.push_back(bigger);
                    }
                frontier.swap(next);
            }
            int count = 0;
            for (const auto& grp : subgroups) {
                Int denom = 1;
                std::vector<std::vector<Rat>> vecs;
                for (const auto& a : grp) {
                    std::vector<Rat> v(n, Rat(0));
                    for (size_t j = 0; j < cols.size(); ++j)
                        for (int i = 0; i < n; ++i)
                            v[i] += Rat(mod_floor(a[j], divisors[j]) * dec.b(i, cols[j])) /
                                    Rat(divisors[j]);
                    vecs.push_back(v);
                }
                for (const auto& v : vecs)
                    for (Rat x : v) {
                        x.canonicalize();
                        denom = lcm(denom, x.get_den());
                    }
                IntMat stack(int(vecs.size()) + n, n);
                for (size_t i = 0; i < vecs.size(); ++i)
                    for (int j = 0; j < n; ++j) {
                        Rat x = vecs[i][j] * denom;
                        x.canonicalize();
                        stack(int(i), j) = x.get_num();
                    }
                for (int i = 0; i < n; ++i) stack(int(vecs.size()) + i, i) = denom;
                IntMat basis = hermite_row_basis(stack);
                RatMat p(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) p(i, j) = Rat(basis(i, j)) / Rat(denom);
                RatMat gram = p * to_rat(l.gram) * p.transpose();
                if (!is_integral(gram)) continue;
                IntMat ig = to_int(gram);
                bool even = true;
                for (int i = 0; i < n; ++i)
                    if (ig(i, i) % 2 != 0) even = false;
                if (even) ++count;
            }
            if (int(isotropic_subgroups(q, budget).size()) != count) {
                b_ok = false;
                b_note = "count mismatch on " + to_string(l.gram);
                break;
            }
            ++b_cases;
        }
    } catch (const std::exception& e) {
        b_ok = false;
        b_note = e.what();
    }

    // (c) Milgram congruence for constructors and random sums of <= 4 names
    bool c_ok = true;
    int c_cases = 0;
    std::string c_note;
    try {
        std::vector<std::string> names = {"U",  "U(2)", "A1",  "A2",  "A3",  "A1(2)", "D4",
                                          "D5", "D6",   "D9",  "E6",  "E7",  "E8",    "H5",
                                          "L9", "M9",   "<2>", "<4>", "<8>", "<-8>",  "T(4,4,4)",
                                          "T(3,4,4)",   "T(2,5,6)"};
        std::mt19937 rng(777);
        auto check_one = [&](const std::string& expr) {
            Lattice l = parse_lattice(expr);
            int expect = ((l.t_plus - l.t_minus) % 8 + 8) % 8;
            if (milgram_signature(discriminant_form(l), budget) != expect) {
                c_ok = false;
                c_note = "congruence fails for " + expr;
            }
            ++c_cases;
        };
        for (const auto& n : names) check_one(n);
        for (int t = 0; t < 30 && c_ok; ++t) {
            std::string expr = names[rng() % names.size()];
            int k = 1 + int(rng() % 3);
            for (int i = 0; i < k; ++i) expr += "+" + names[rng() % names.size()];
            check_one(expr);
        }
    } catch (const std::exception& e) {
        c_ok = false;
        c_note = e.what();
    }

    std::ostringstream os;
    os << "(a) " << a_pairs << " oracle pairs" << (a_note.empty() ? "" : ": " + a_note) << "; (b) "
       << b_cases << " lattices" << (b_note.empty() ? "" : ": " + b_note) << "; (c) " << c_cases
       << " signatures" << (c_note.empty() ? "" : ": " + c_note);
    criterion(5, "oracle equivalences", a_ok && b_ok && c_ok, os.str());
}

void criterion6(const Dataset& data) {
    struct GenusCase {
        long w1, w2, w3, d, expect;
    };
    // coordinate curves of the bundled configurations where the formula applies
    std::vector<GenusCase> cases = {
        {6, 2, 1, 18, 7},   // C_x, order-9 example
        {9, 6, 1, 18, 1},   // C_z
        {9, 6, 2, 18, 0},   // C_w
        {8, 4, 3, 16, 0},   // C_w, 37b
        {8, 4, 1, 16, 1},   // C_z, 37b
        {4, 3, 1, 16, 6},   // C_x, 37b
        {11, 4, 3, 36, 3},  // C_x, 43a
        {18, 4, 3, 36, 1},  // C_y, 43a
        {18, 11, 3, 36, 0}, // C_z, 43a
    };
    bool ok = true;
    std::string note;
    for (const auto& c : cases) {
        try {
            if (curve_genus(c.w1, c.w2, c.w3, c.d) != c.expect) {
                ok = false;
                note = "wrong genus in P(" + std::to_string(c.w1) + "," + std::to_string(c.w2) +
                       "," + std::to_string(c.w3) + ")";
            }
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
    }
    // config genus fields agree with the formula values used above
    try {
        CurveConfig c = load_curve_config(data.base_dir + "/configs/m9_12b.json");
        std::map<std::string, Int> genus;
        for (const auto& n : c.nodes) genus[n.id] = n.genus;
        if (genus.at("Cx") != 7 || genus.at("Cz") != 1 || genus.at("Cw") != 0) {
            ok = false;
            note = "m9_12b genera drifted from the formula values";
        }
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }
    criterion(6, "genus formula on bundled coordinate curves", ok,
              std::to_string(cases.size()) + " instances" + (note.empty() ? "" : ": " + note));
}

void criterion7(const Dataset& data) {
    using nlohmann::json;
    bool ok = true;
    std::string note;
    int mutations = 0;

    auto run_mutation = [&](long m, const std::string& no,
                            const std::function<void(json&)>& mutate) {
        fs::path dir = fs::temp_directory_path() /
                       ("mirrorlat_acc_" + std::to_string(std::rand()) + "_" +
                        std::to_string(mutations));
        fs::create_directories(dir / "configs");
        for (const char* f :
             {"table1.json", "tables.json", "geometry.json", "weight_systems.json"})
            fs::copy_file(fs::path(data.base_dir) / f, dir / f);
        for (const auto& e : fs::directory_iterator(fs::path(data.base_dir) / "configs"))
            fs::copy_file(e.path(), dir / "configs" / e.path().filename());
        json j;
        {
            std::ifstream in(dir / "tables.json");
            in >> j;
        }
        for (auto& t : j.at("tables"))
            if (t.at("m").get<long>() == m)
                for (auto& r : t.at("rows"))
                    if (r.at("no").get<std::string>() == no) mutate(r.at("entries").at(0));
        {
            std::ofstream out(dir / "tables.json");
            out << j.dump(2);
        }
        ++mutations;
        bool localized = false;
        try {
            Dataset mutated = load_dataset(dir.string());
            VerificationReport rep = verify_mirrors(mutated, Int(m));
            for (const auto& row : rep.rows)
                if (row.id == "m=" + std::to_string(m) + ":" + no && !row.ok()) localized = true;
            if (rep.ok()) {
                ok = false;
                note = "mutation of m=" + std::to_string(m) + ":" + no + " went undetected";
            } else if (!localized) {
                ok = false;
                note = "mutation of m=" + std::to_string(m) + ":" + no + " not localized";
            }
        } catch (const std::exception&) {
            // a load-time rejection is also a detection, but not a localized one
            ok = false;
            note = "mutated dataset failed to load";
        }
        fs::remove_all(dir);
    };

    struct Target {
        long m;
        const char* no;
    };
    std::vector<Target> targets = {{42, "14"}, {24, "13b"}, {16, "37a"}, {9, "12b"}, {10, "42b"}};
    for (const auto& t : targets) {
        run_mutation(t.m, t.no, [](json& e) { e["r"] = e["r"].get<int>() + 1; });
        run_mutation(t.m, t.no, [](json& e) {
            std::string q = e["q"].get<std::string>();
            // flip the sign of the last eps argument
            auto pos = q.rfind(",-");
            if (pos != std::string::npos)
                q.erase(pos + 1, 1);
            else {
                pos = q.rfind(",");
                q.insert(pos + 1, "-");
            }
            e["q"] = q;
        });
        run_mutation(t.m, t.no, [](json& e) { e["dual"]["row"] = "zz"; });
    }
    criterion(7, "mutation sensitivity", ok,
              std::to_string(mutations) + " single-field mutations" +
                  (note.empty() ? "" : ": " + note));
}

}  // namespace

int main() {
    try {
        Dataset data = load_dataset(data_dir());
        criterion1(data);
        VerificationReport mirrors = criterion2(data);
        criterion3(mirrors);
        criterion4(data);
        criterion5(data);
        criterion6(data);
        criterion7(data);
    } catch (const std::exception& e) {
        std::cout << "acceptance suite aborted: " << e.what() << std::endl;
        return 2;
    }
    std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
    return g_failures == 0 ? 0 : 1;
}
