#include "extlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "extlab/charmatrix.hpp"
#include "extlab/lattice.hpp"

namespace extlab {

using json = nlohmann::ordered_json;

void Tally::violation(const Verdict& v)
{
    ++violations_total;
    if (violations.size() < kKeep && v.witness) violations.push_back(*v.witness);
}

void Tally::finding(const Verdict& v)
{
    ++findings_total;
    if (findings.size() < kKeep && v.witness) findings.push_back(*v.witness);
}

void Tally::merge(Tally&& o)
{
    instances += o.instances;
    violations_total += o.violations_total;
    findings_total += o.findings_total;
    for (auto& w : o.violations)
        if (violations.size() < kKeep) violations.push_back(std::move(w));
    for (auto& w : o.findings)
        if (findings.size() < kKeep) findings.push_back(std::move(w));
    for (auto& [k, v] : o.counters) counters[k] += v;
    for (auto& s : o.samples)
        if (samples.size() < kKeep) samples.push_back(std::move(s));
}

namespace {

// Fixed-size blocks, merged in block order, so the result does not depend on jobs.
template <class Item, class F>
Tally sweep(const std::vector<Item>& items, int jobs, F fn)
{
    const size_t block = 8;
    size_t nb = (items.size() + block - 1) / block;
    std::vector<Tally> parts(nb);
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (;;) {
            size_t b = next++;
            if (b >= nb) return;
            try {
                for (size_t i = b * block; i < std::min(items.size(), (b + 1) * block); ++i) fn(items[i], parts[b]);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    int nt = std::max(1, std::min<int>(jobs, static_cast<int>(nb)));
    if (nt == 1) {
        work();
    } else {
        std::vector<std::thread> ts;
        for (int t = 0; t < nt; ++t) ts.emplace_back(work);
        for (auto& t : ts) t.join();
    }
    if (err) std::rethrow_exception(err);
    Tally out;
    for (auto& p : parts) out.merge(std::move(p));
    return out;
}

std::vector<WidthTwoInstance> width_two_domain(const RunConfig& c, int cap)
{
    std::vector<WidthTwoInstance> out;
    if (c.chains) {
        auto [a, b] = *c.chains;
        if (a + b <= cap) out = enumerate_width_two_posets(a, b, c.cap);
        return out;
    }
    for (int n = 1; n <= std::min(c.max_n, cap); ++n) {
        auto v = width_two_posets_of_size(n, c.cap);
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    return out;
}

std::vector<Poset> poset_domain(const RunConfig& c, int cap)
{
    std::vector<Poset> out;
    for (int n = 1; n <= std::min(c.max_n, cap); ++n) {
        auto v = all_posets(n);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

template <class T>
void apply_budget(std::vector<T>& v, const RunConfig& c)
{
    if (c.budget && v.size() > *c.budget) v.resize(*c.budget);
}

std::string domain_note(const RunConfig& c, int cap, const char* what)
{
    if (c.chains && std::string(what) == "width-two")
        return "width-two posets with a=" + std::to_string(c.chains->first) + ", b=" + std::to_string(c.chains->second);
    return std::string(what) + " posets, n <= " + std::to_string(std::min(c.max_n, cap));
}

template <class F>
void for_each_triple(int n, F fn)
{
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (x != y && y != z && x != z) fn(ElementTriple{x, y, z});
}

Verdict fail_with(const std::string& idx, const std::string& lhs, const std::string& rhs, const Poset& p,
                  const std::optional<ChainDecomposition>& d, const std::optional<ElementTriple>& t = std::nullopt)
{
    Verdict v = Verdict::fail(idx, lhs, rhs);
    return annotate(v, p, d, t);
}

std::string u64s(std::uint64_t v) { return std::to_string(v); }

SuiteReport make_report(const std::string& name, bool theorem_backed = true)
{
    SuiteReport r;
    r.name = name;
    r.theorem_backed = theorem_backed;
    return r;
}

// ---- suites ----

SuiteReport suite_nmatrix(const RunConfig& c)
{
    SuiteReport r = make_report("nmatrix");
    auto dom = width_two_domain(c, c.cap);
    r.notes["domain"] = domain_note(c, c.cap, "width-two");
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        if (w.chains.b() == 0) {
            ++t.counters["skipped_empty_second_chain"];
            return;
        }
        ++t.instances;
        LinearExtension lo = minimal_extension(w.poset, w.chains);
        for (int x = 0; x < w.poset.size(); ++x)
            for (int y = 0; y < w.poset.size(); ++y)
                if (w.poset.less(x, y) && lo[x] > lo[y])
                    t.violation(fail_with("minimal extension", to_text(w.poset), "not an extension", w.poset, w.chains));
        CharSequence seq = characteristic_sequence(w.poset, w.chains);
        std::vector<int> order = lo.order();
        int beta_b = w.chains.c2.back();
        if (seq.d != lo[beta_b] || static_cast<int>(seq.mats.size()) != seq.d)
            t.violation(fail_with("sequence length", std::to_string(seq.mats.size()), std::to_string(lo[beta_b]), w.poset, w.chains));
        for (int i = 0; i < static_cast<int>(seq.mats.size()) && i < static_cast<int>(order.size()); ++i) {
            int x = order[i];
            auto want = w.chains.in_c1(x) ? CharSequence::Kind::S
                      : x == beta_b      ? CharSequence::Kind::W
                                         : CharSequence::Kind::WT;
            int k = w.chains.in_c1(x) ? seq.mats[i].k : inc_count(w.poset, x) + 1;
            if (seq.mats[i].kind != want || seq.mats[i].k != k)
                t.violation(fail_with("factor " + std::to_string(i + 1), "wrong kind", element_name(x, w.chains), w.poset, w.chains));
        }
        Matrix prod = n_matrix_product(seq);
        Matrix brute = n_matrix_bruteforce(w.poset, w.chains);
        if (prod != brute) t.violation(fail_with("N_P", prod.to_json(), brute.to_json(), w.poset, w.chains));
        if (auto m = minor_sign_scan(prod, Sign::NonNegative))
            t.violation(fail_with("minor " + std::to_string(m->i) + "," + std::to_string(m->j) + "," +
                                      std::to_string(m->k) + "," + std::to_string(m->l),
                                  to_string(minor2(prod, m->i, m->j, m->k, m->l)), "0", w.poset, w.chains));
    });
    return r;
}

SuiteReport suite_bijection(const RunConfig& c)
{
    SuiteReport r = make_report("bijection");
    auto dom = width_two_domain(c, c.cap);
    r.notes["domain"] = domain_note(c, c.cap, "width-two");
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        const Poset& p = w.poset;
        const ChainDecomposition& d = w.chains;
        LatticeRegion reg = region_of(p, d);
        ExtensionSet es(p);
        int a = d.a(), shift = a * (a + 1) / 2;
        QPoly qsum;
        std::vector<int> top(a + 1, -1), bot(a + 1, d.b() + 1);
        for (size_t e = 0; e < es.count(); ++e) {
            LinearExtension l = es.extension(e);
            LatticePath g = path_of_extension(l, d);
            ++t.counters["extensions"];
            for (Point q : g.points()) {
                top[q.x] = std::max(top[q.x], q.y);
                bot[q.x] = std::min(bot[q.x], q.y);
            }
            if (!reg.contains_path(g)) {
                t.violation(fail_with("extension " + std::to_string(e), g.steps, "path outside region", p, d));
                continue;
            }
            if (!(extension_of_path(g, p, d) == l))
                t.violation(fail_with("extension " + std::to_string(e), g.steps, "round trip differs", p, d));
            int wl = weight(l, d);
            if (path_weight(g) != wl - shift)
                t.violation(fail_with("extension " + std::to_string(e), std::to_string(path_weight(g)),
                                      std::to_string(wl - shift), p, d));
            qsum += QPoly::monomial(wl - shift, 1);
        }
        QPoly paths = count_paths(reg, {0, 0}, {a, d.b()}, true);
        if (paths.at_one() != BigInt(u64s(es.count())))
            t.violation(fail_with("path count", to_string(paths.at_one()), u64s(es.count()), p, d));
        if (paths != qsum) t.violation(fail_with("q path count", paths.str(), qsum.str(), p, d));
        // boundaries are the column extremes over all extension paths
        if (top != reg.hi || bot != reg.lo) t.violation(fail_with("boundary", reg.upper.steps, reg.lower.steps, p, d));
        if (!(reg.upper == path_of_extension(minimal_extension(p, d), d)))
            t.violation(fail_with("upper boundary", reg.upper.steps, "path of the minimal extension", p, d));
    });
    return r;
}

SuiteReport suite_qcpc(const RunConfig& c)
{
    SuiteReport r = make_report("qcpc");
    auto dom = width_two_domain(c, c.cap);
    r.notes["domain"] = domain_note(c, c.cap, "width-two") + ", all ordered triples, all k,l >= 1";
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        ExtensionSet es(w.poset);
        for_each_triple(w.poset.size(), [&](const ElementTriple& tr) {
            CorrelationTable tab = correlation_table(es, w.chains, tr, false);
            ++t.counters["tables"];
            for (auto& [key, poly] : tab.entries) {
                auto [k, l] = key;
                // a zero left side cannot fail
                if (!tab.entries.count({k + 1, l + 1})) continue;
                ++t.counters["checks"];
                Verdict vq = check_qcpc(tab, k, l);
                Verdict v1 = check_cpc(tab, k, l);
                if (!vq.holds) t.violation(annotate(vq, w.poset, w.chains, tr));
                if (!v1.holds) t.violation(annotate(v1, w.poset, w.chains, tr));
                if (vq.holds != v1.holds) {
                    Verdict m = Verdict::fail(std::to_string(k) + "," + std::to_string(l), "q-verdict", "q=1 verdict");
                    t.violation(annotate(m, w.poset, w.chains, tr));
                }
            }
        });
    });
    return r;
}

SuiteReport suite_lattice(const RunConfig& c)
{
    const int cap = c.cap;
    SuiteReport r = make_report("lattice");
    auto dom = width_two_domain(c, cap);
    r.notes["domain"] = domain_note(c, cap, "width-two") + ", all ordered triples, 1 <= i,j <= n";
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        const Poset& p = w.poset;
        int n = p.size();
        if (n < 3) return;
        ++t.instances;
        ExtensionSet es(p);
        for_each_triple(n, [&](const ElementTriple& tr) {
            CorrelationTable tab = correlation_table(es, w.chains, tr, false);
            CrossDecomposition cd(p, w.chains, tr);
            ++t.counters["tables"];
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    QPoly f = cd.f_q(i, j);
                    if (f != tab.at(i, j)) t.violation(fail_with("F " + std::to_string(i) + "," + std::to_string(j),
                                                                 f.str(), tab.at(i, j).str(), p, w.chains, tr));
                    QPoly direct = cd.f_q_raw(i, j) * cd.f_q_raw(i + 1, j + 1) - cd.f_q_raw(i + 1, j) * cd.f_q_raw(i, j + 1);
                    QPoly expanded = cd.cross_difference_raw(i, j);
                    if (direct != expanded)
                        t.violation(fail_with("cross " + std::to_string(i) + "," + std::to_string(j), expanded.str(),
                                              direct.str(), p, w.chains, tr));
                }
            Point top{cd.ell() - 1, cd.chains().b()};
            for (int u = 0; u <= top.y; ++u)
                for (int v = u + 1; v <= top.y; ++v) {
                    Point Y{top.x, u}, V{top.x, v};
                    if (!cd.region().contains(Y) || !cd.region().contains(V)) continue;
                    for (int i = 1; i <= n; ++i) {
                        ++t.counters["half_path_minors"];
                        QPoly g = cd.gcp_q(i, Y, V), h = cd.hcp_q(i, Y, V);
                        if (!g.nonnegative())
                            t.violation(fail_with("GCP i=" + std::to_string(i) + ",Y=" + std::to_string(u) +
                                                      ",V=" + std::to_string(v),
                                                  g.str(), ">= 0", p, w.chains, tr));
                        if (!h.nonpositive())
                            t.violation(fail_with("HCP j=" + std::to_string(i) + ",Y=" + std::to_string(u) +
                                                      ",V=" + std::to_string(v),
                                                  h.str(), "<= 0", p, w.chains, tr));
                    }
                }
        });
    });
    return r;
}

SuiteReport suite_gcpc_signed(const RunConfig& c)
{
    SuiteReport r = make_report("gcpc-signed");
    auto dom = width_two_domain(c, c.cap);
    r.notes["domain"] = domain_note(c, c.cap, "width-two") + ", all ordered triples, i <= k, j <= l";
    r.notes["range"] = "sign(i) = sign(j) and sign(k) = sign(l); other sign patterns are findings";
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        ExtensionSet es(w.poset);
        for_each_triple(w.poset.size(), [&](const ElementTriple& tr) {
            CorrelationTable tab = correlation_table(es, std::nullopt, tr, true);
            ++t.counters["tables"];
            Verdict v = check_gcpc_all(tab, GcpcRange::Centered);
            if (!v.holds) t.violation(annotate(v, w.poset, w.chains, tr));
            // the literal all-signs reading, kept as data
            Verdict lit = check_gcpc_all(tab, GcpcRange::AllSigned);
            if (!lit.holds) {
                ++t.counters["tables_failing_all_signs_reading"];
                t.finding(annotate(lit, w.poset, w.chains, tr));
            }
            // telescoping obstruction data, unsigned part of the same tables
            CorrelationTable un;
            un.triple = tr;
            for (auto& [key, poly] : tab.entries)
                if (key.first >= 1 && key.second >= 1) un.entries.emplace(key, poly);
            int holes = telescoping_holes(un);
            if (holes) {
                ++t.counters["tables_with_telescoping_holes"];
                t.counters["telescoping_holes"] += holes;
            }
        });
    });
    r.notes["telescoping"] = "zero entries lying between nonzero entries of the unsigned table (record only)";
    return r;
}

SuiteReport suite_equality(const RunConfig& c)
{
    SuiteReport r = make_report("equality");
    auto dom = width_two_domain(c, c.cap);
    r.notes["domain"] = domain_note(c, c.cap, "width-two") + ", all ordered triples, 1 <= k,l <= n-1";
    r.notes["q_form"] = "symmetric form checked; displayed form divergences counted";
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        const Poset& p = w.poset;
        int n = p.size();
        ExtensionSet es(p);
        const QPoly zero;
        for_each_triple(n, [&](const ElementTriple& tr) {
            CorrelationTable tab = correlation_table(es, w.chains, tr, false);
            bool y_fixed = inc_count(p, tr.z2) == 0;
            auto get = [&](int k, int l) -> const QPoly& {
                auto it = tab.entries.find({k, l});
                return it == tab.entries.end() ? zero : it->second;
            };
            for (int k = 1; k <= n - 1; ++k)
                for (int l = 1; l <= n - 1; ++l) {
                    const QPoly &f00 = get(k, l), &f10 = get(k + 1, l), &f01 = get(k, l + 1), &f11 = get(k + 1, l + 1);
                    ++t.counters["checks"];
                    if (f00.is_zero() && f10.is_zero() && f01.is_zero() && f11.is_zero()) {
                        ++t.counters["equalities"];
                        ++t.counters["case_c"];
                        continue;
                    }
                    CpcEquality e = classify_cpc_equality(f00, f10, f01, f11, y_fixed, k, l);
                    if (e.equality) ++t.counters["equalities"];
                    if (e.cases & CaseA) ++t.counters["case_a"];
                    if (e.cases & CaseB) ++t.counters["case_b"];
                    if (e.cases & CaseC) ++t.counters["case_c"];
                    if (e.cases & CaseD) ++t.counters["case_d"];
                    if (e.displayed_q != e.q_equality) ++t.counters["displayed_form_divergences"];
                    if (e.equality && !e.cases) ++t.counters["equality_without_case"];
                    if (!e.equality && e.cases) ++t.counters["case_without_equality"];
                    if (e.equality != e.q_equality) ++t.counters["q_form_mismatches"];
                    if (!e.verdict.holds) t.violation(annotate(e.verdict, p, w.chains, tr));
                }
        });
    });
    return r;
}

SuiteReport suite_known_values(const RunConfig&)
{
    SuiteReport r = make_report("known-values");
    Tally& t = r.tally;
    Poset p = three_chain_example(4);
    const int a1 = 0, b4 = 7, g = 8;
    ElementTriple tr{a1, g, b4};
    ++t.instances;
    CorrelationTable tab = correlation_table(p, std::nullopt, tr, true);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; i + j <= 5; ++j) {
            BigInt want = BigInt(1) << (i + j - 2);
            ++t.counters["value_checks"];
            if (tab.count(i, j) != want)
                t.violation(fail_with("F " + std::to_string(i) + "," + std::to_string(j), to_string(tab.count(i, j)),
                                      to_string(want), p, std::nullopt, tr));
        }
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; k + l <= 3; ++l) {
            ++t.counters["equality_checks"];
            Verdict v = check_cpc(tab, k, l);
            if (!v.holds) t.violation(annotate(v, p, std::nullopt, tr));
            CpcEquality e = classify_cpc_equality(tab, inc_count(p, g) == 0, k, l);
            BigInt want = BigInt(1) << (2 * k + 2 * l - 2);
            if (!e.equality || tab.count(k, l) * tab.count(k + 1, l + 1) != want)
                t.violation(fail_with(std::to_string(k) + "," + std::to_string(l), "not an equality",
                                      to_string(want), p, std::nullopt, tr));
            // width-three negative control: equality with no case
            if (e.cases != 0)
                t.violation(fail_with(std::to_string(k) + "," + std::to_string(l), "case " + e.case_name(), "none", p,
                                      std::nullopt, tr));
        }
    bool threw = false;
    try {
        ChainDecomposition d{{0, 1, 2, 3}, {4, 5, 6, 7, 8}};
        classify_cpc_equality(p, d, tr, 1, 1);
    } catch (const WidthError&) {
        threw = true;
    }
    if (!threw) t.violation(fail_with("width guard", "no WidthError", "WidthError", p, std::nullopt, tr));

    // two 2-chains, x = alpha_1, y = alpha_2
    ++t.instances;
    Poset c22 = Poset::from_relations(4, {{0, 1}, {2, 3}});
    KahnSaksVector ks = kahn_saks_vector(c22, std::nullopt, 0, 1);
    if (ks.count(1) != 3 || ks.count(2) != 2 || ks.count(3) != 1 || !check_kahn_saks(ks, 2, false).holds)
        t.violation(fail_with("Kahn-Saks k=2", to_string(ks.count(2)), "3,2,1", c22, std::nullopt));

    // strictness instance for the quadrant decomposition: recorded, see README
    auto terms = xyz_gcpc_terms(p, g, a1, b4);
    BigInt sum = 0, at = 0;
    for (auto& x : terms) {
        sum += x.value;
        if (x.i == -1 && x.j == -1 && x.k == 2 && x.l == 2) at = x.value;
    }
    BigInt gap = xyz_gap(p, g, a1, b4);
    r.notes["xyz_instance"] = json{{"F(-1,-1)", to_string(tab.count(-1, -1))},
                                   {"F(-1,2)", to_string(tab.count(-1, 2))},
                                   {"F(2,-1)", to_string(tab.count(2, -1))},
                                   {"F(2,2)", to_string(tab.count(2, 2))},
                                   {"term(-1,-1,2,2)", to_string(at)},
                                   {"quadrant_sum", to_string(sum)},
                                   {"direct_gap", to_string(gap)}};
    if (sum != gap) t.violation(fail_with("quadrant sum", to_string(sum), to_string(gap), p, std::nullopt, tr));
    if (at <= 0) {
        Verdict f = fail_with("i=-1,j=-1,k=2,l=2", to_string(at), "> 0", p, std::nullopt, tr);
        t.finding(f);
    }
    return r;
}

SuiteReport suite_reduction(const RunConfig& c)
{
    SuiteReport r = make_report("reduction");
    auto gp6 = poset_domain(c, 6);
    auto gp7 = poset_domain(c, 7);
    r.notes["domain"] = "identity: " + domain_note(c, 6, "all") + "; Kahn-Saks: " + domain_note(c, 7, "all") +
                        "; q-Kahn-Saks: " + domain_note(c, c.cap, "width-two");
    r.notes["q_kahn_saks"] = "empirical only; failures are findings";
    r.tally = sweep(gp6, c.jobs, [](const Poset& p, Tally& t) {
        ++t.instances;
        for (int x = 0; x < p.size(); ++x)
            for (int z = 0; z < p.size(); ++z) {
                if (x == z) continue;
                ++t.counters["identity_pairs"];
                Verdict v = cpc_to_ks_reduction(p, x, z);
                if (!v.holds) t.violation(annotate(v, p, std::nullopt, ElementTriple{x, p.size(), z}));
            }
    });
    r.tally.merge(sweep(gp7, c.jobs, [](const Poset& p, Tally& t) {
        ++t.instances;
        ExtensionSet es(p);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                if (x == y) continue;
                KahnSaksVector v = kahn_saks_vector(es, std::nullopt, x, y);
                for (int k = 2; k < p.size(); ++k) {
                    ++t.counters["kahn_saks_checks"];
                    Verdict ks = check_kahn_saks(v, k, false);
                    if (!ks.holds) t.violation(annotate(ks, p, std::nullopt));
                }
            }
    }));
    auto w2 = width_two_domain(c, c.cap);
    r.tally.merge(sweep(w2, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        ExtensionSet es(w.poset);
        for (int x = 0; x < w.poset.size(); ++x)
            for (int y = 0; y < w.poset.size(); ++y) {
                if (x == y) continue;
                KahnSaksVector v = kahn_saks_vector(es, w.chains, x, y);
                bool same = w.chains.in_c1(x) == w.chains.in_c1(y);
                for (int k = 2; k < w.poset.size(); ++k) {
                    ++t.counters[same ? "q_kahn_saks_checks_same_chain" : "q_kahn_saks_checks_cross_chain"];
                    Verdict ks = check_kahn_saks(v, k, true);
                    if (ks.holds) continue;
                    ++t.counters[same ? "q_kahn_saks_failures_same_chain" : "q_kahn_saks_failures_cross_chain"];
                    annotate(ks, w.poset, w.chains);
                    ks.witness->triple = element_name(x, w.chains) + "," + element_name(y, w.chains);
                    t.finding(ks);
                }
            }
    }));
    return r;
}

SuiteReport suite_stanley(const RunConfig& c)
{
    SuiteReport r = make_report("stanley");
    auto gp = poset_domain(c, 7);
    auto w2 = width_two_domain(c, 7);
    r.notes["domain"] = "log-concavity: " + domain_note(c, 7, "all") + "; equality pattern: " +
                        domain_note(c, 7, "width-two");
    r.tally = sweep(gp, c.jobs, [](const Poset& p, Tally& t) {
        ++t.instances;
        ExtensionSet es(p);
        for (int x = 0; x < p.size(); ++x) {
            ++t.counters["histograms"];
            Verdict v = check_stanley(q_vector(es, x));
            if (!v.holds) t.violation(annotate(v, p, std::nullopt));
        }
    });
    r.tally.merge(sweep(w2, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        ExtensionSet es(w.poset);
        for (int x = 0; x < w.poset.size(); ++x) {
            ++t.counters["equality_histograms"];
            Verdict v = check_stanley_equality(q_vector(es, x));
            if (!v.holds) t.violation(annotate(v, w.poset, w.chains));
        }
    }));
    return r;
}

SuiteReport suite_minors(const RunConfig& c)
{
    SuiteReport r = make_report("minors");
    auto dom = width_two_domain(c, c.cap);
    r.notes["domain"] = domain_note(c, c.cap, "width-two") +
                        "; G and H over all ordered pairs, factorization over triples with z1 < z2 < z3";
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        const Poset& p = w.poset;
        int n = p.size();
        ExtensionSet es(p);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                ++t.counters["matrices"];
                Matrix g = g_matrix(p, {u, v, v});
                if (p.less(u, v)) {
                    auto qv = q_vector(es, v);
                    for (int c = 1; c <= g.cols(); ++c) {
                        BigInt sum = 0;
                        for (int r = 1; r <= g.rows(); ++r) sum += g(r, c);
                        auto it = qv.find(c);
                        if (sum != (it == qv.end() ? BigInt(0) : it->second))
                            t.violation(fail_with("G column " + std::to_string(c), to_string(sum), "q_vector", p, w.chains,
                                                  ElementTriple{u, v, v}));
                    }
                }
                if (auto m = minor_sign_scan(g, Sign::NonNegative))
                    t.violation(fail_with("G minor " + std::to_string(m->i) + "," + std::to_string(m->j) + "," +
                                              std::to_string(m->k) + "," + std::to_string(m->l),
                                          to_string(minor2(g, m->i, m->j, m->k, m->l)), ">= 0", p, w.chains,
                                          ElementTriple{u, v, v}));
                Matrix h = h_matrix(p, {v, v, u});
                if (auto m = minor_sign_scan(h, Sign::NonPositive))
                    t.violation(fail_with("H minor " + std::to_string(m->i) + "," + std::to_string(m->j) + "," +
                                              std::to_string(m->k) + "," + std::to_string(m->l),
                                          to_string(minor2(h, m->i, m->j, m->k, m->l)), "<= 0", p, w.chains,
                                          ElementTriple{v, v, u}));
            }
        // normalizing a triple yields another poset of the domain, so comparable triples cover every case
        for_each_triple(n, [&](const ElementTriple& tr) {
            if (!p.less(tr.z1, tr.z2) || !p.less(tr.z2, tr.z3)) return;
            ++t.counters["factorizations"];
            Factorization f = factorize(p, tr);
            Matrix fm = factorized_f(f, n);
            CorrelationTable tab = correlation_table(es, std::nullopt, tr, false);
            bool same = true;
            for (int i = 1; i <= n && same; ++i)
                for (int j = 1; j <= n; ++j)
                    if (fm(i, j) != tab.count(i, j)) {
                        same = false;
                        t.violation(fail_with("F " + std::to_string(i) + "," + std::to_string(j), to_string(fm(i, j)),
                                              to_string(tab.count(i, j)), p, w.chains, tr));
                        break;
                    }
        });
    });
    return r;
}

SuiteReport suite_gyy_xyz(const RunConfig& c)
{
    SuiteReport r = make_report("gyy-xyz");
    auto w2 = width_two_domain(c, 7);
    auto gp = poset_domain(c, 6);
    int atoms = c.gyy_atoms;
    r.notes["domain"] = "GYY: " + domain_note(c, 7, "width-two") + ", forward events with <= " + std::to_string(atoms) +
                        " atoms; XYZ: " + domain_note(c, 6, "all") + "; quadrant decomposition: " +
                        domain_note(c, 7, "width-two") + "; atomic events and one-third: " +
                        domain_note(c, c.cap, "width-two");
    r.tally = sweep(w2, c.jobs, [atoms](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        const ChainDecomposition& d = w.chains;
        ExtensionSet es(w.poset);
        size_t words = (es.count() + 63) / 64;
        std::vector<std::pair<int, int>> all_atoms;
        for (int i = 1; i <= d.a(); ++i)
            for (int j = 1; j <= d.b(); ++j) all_atoms.emplace_back(i, j);
        std::vector<std::vector<std::uint64_t>> atom_bits;
        for (auto [i, j] : all_atoms) {
            std::vector<std::uint64_t> b(words, 0);
            for (size_t e = 0; e < es.count(); ++e)
                if (es.pos(e, d.c1[i - 1]) < es.pos(e, d.c2[j - 1])) b[e / 64] |= std::uint64_t(1) << (e % 64);
            atom_bits.push_back(std::move(b));
        }
        // events: subsets of at most `atoms` atoms
        std::vector<AtomList> events{{}};
        std::vector<std::vector<std::uint64_t>> bits;
        std::vector<std::uint64_t> full(words, ~std::uint64_t(0));
        if (es.count() % 64) full.back() = (std::uint64_t(1) << (es.count() % 64)) - 1;
        bits.push_back(full);
        std::function<void(size_t, AtomList&, std::vector<std::uint64_t>&)> grow =
            [&](size_t from, AtomList& cur, std::vector<std::uint64_t>& b) {
                if (static_cast<int>(cur.size()) == atoms) return;
                for (size_t a = from; a < all_atoms.size(); ++a) {
                    cur.push_back(all_atoms[a]);
                    std::vector<std::uint64_t> nb(words);
                    for (size_t k = 0; k < words; ++k) nb[k] = b[k] & atom_bits[a][k];
                    events.push_back(cur);
                    bits.push_back(nb);
                    grow(a + 1, cur, nb);
                    cur.pop_back();
                }
            };
        AtomList cur;
        grow(0, cur, full);
        auto pop = [&](const std::vector<std::uint64_t>& b) {
            std::uint64_t s = 0;
            for (auto x : b) s += __builtin_popcountll(x);
            return s;
        };
        std::vector<std::uint64_t> cnt(events.size());
        for (size_t e = 0; e < events.size(); ++e) cnt[e] = pop(bits[e]);
        for (size_t u = 0; u < events.size(); ++u)
            for (size_t v = u; v < events.size(); ++v) {
                ++t.counters["gyy_pairs"];
                std::uint64_t nab = 0;
                for (size_t k = 0; k < words; ++k) nab += __builtin_popcountll(bits[u][k] & bits[v][k]);
                if (!product_leq(cnt[u], cnt[v], nab, es.count())) {
                    Verdict g = check_gyy(es, d, events[u], events[v]);
                    t.violation(annotate(g, w.poset, d));
                }
            }
        for (int x = 0; x < w.poset.size(); ++x)
            for (int y = 0; y < w.poset.size(); ++y)
                for (int z = y + 1; z < w.poset.size(); ++z) {
                    if (x == y || x == z) continue;
                    ++t.counters["quadrant_decompositions"];
                    Verdict v = xyz_from_gcpc_decomposition(es, w.poset, x, y, z);
                    if (!v.holds) t.violation(v);
                }
    });
    // atomic events as position bounds, and the one-third statistic
    auto w8 = width_two_domain(c, c.cap);
    r.tally.merge(sweep(w8, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        const ChainDecomposition& d = w.chains;
        ExtensionSet es(w.poset);
        for (int i = 1; i <= d.a(); ++i)
            for (int j = 1; j <= d.b(); ++j) {
                ++t.counters["atomic_event_identities"];
                for (size_t e = 0; e < es.count(); ++e)
                    if ((es.pos(e, d.c1[i - 1]) < es.pos(e, d.c2[j - 1])) != (es.pos(e, d.c1[i - 1]) < i + j)) {
                        t.violation(fail_with("atom " + std::to_string(i) + "," + std::to_string(j), "L(alpha) < L(beta)",
                                              "L(alpha) < i+j", w.poset, d));
                        break;
                    }
            }
        if (w.poset.size() < 2 || width(w.poset) < 2) return;
        ++t.counters["one_third_posets"];
        OneThird o = one_third_statistic(w.poset);
        if (o.delta < Rational(1, 3))
            t.violation(fail_with("one third", to_string(o.delta), "1/3", w.poset, d));
    }));
    r.tally.merge(sweep(gp, c.jobs, [](const Poset& p, Tally& t) {
        ++t.instances;
        ExtensionSet es(p);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y)
                for (int z = y + 1; z < p.size(); ++z) {
                    if (x == y || x == z) continue;
                    ++t.counters["xyz_triples"];
                    bool anti = !p.comparable(x, y) && !p.comparable(x, z) && !p.comparable(y, z);
                    if (anti) ++t.counters["xyz_antichain_triples"];
                    Verdict v = check_xyz(es, p, x, y, z, true);
                    if (!v.holds) t.violation(v);
                }
    }));
    return r;
}

bool block_equal(const Matrix& x, const Matrix& y, int N)
{
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (x.get(i, j) != y.get(i, j)) return false;
    return true;
}

SuiteReport suite_admissible(const RunConfig& c)
{
    SuiteReport r = make_report("admissible");
    Tally& t = r.tally;
    auto fail = [&](const std::string& what, const std::string& lhs, const std::string& rhs) {
        t.violation(Verdict::fail(what, lhs, rhs));
    };
    for (int N : {6, 10}) {
        ++t.instances;
        int M = N + 4;  // products are banded, so the top N x N block is exact
        Matrix S = build_S(M), T = build_T(M), U = build_U(M);
        Matrix TS = T * S;
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                if (TS(i, j) != (i <= j + 1 ? 1 : 0)) fail("TS pattern N=" + std::to_string(N), to_string(TS(i, j)), "");
        if (!block_equal(S * T, U * TS, N)) fail("ST = UTS, N=" + std::to_string(N), (S * T).to_json(), (U * TS).to_json());
        for (int k = 0; k <= N; ++k) {
            Matrix W = build_Wk(M, k), W1 = build_Wk(M, k + 1);
            ++t.counters["identities"];
            if (!block_equal(S * W, W1 * S, N)) fail("SW_k = W_{k+1}S, N=" + std::to_string(N) + ",k=" + std::to_string(k), "", "");
            if (!block_equal(S * W * T, W1 * U * T * S, N))
                fail("SW_kT = W_{k+1}UTS, N=" + std::to_string(N) + ",k=" + std::to_string(k), "", "");
        }
        std::vector<std::pair<std::string, Matrix>> mats{{"S", S}, {"T", T}, {"U", U}};
        for (int k = 1; k <= 4; ++k) mats.push_back({"W" + std::to_string(k), build_Wk(M, k)});
        for (auto& [name, m] : mats)
            if (minor_sign_scan(m, Sign::NonNegative)) fail("minor sign of " + name, "<0", ">=0");
    }
    // random admissible pairs v <=cc w: w = r v on supp(v) with r nondecreasing, extended to the right
    std::mt19937_64 rng(c.seed);
    auto uni = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const int L = 12, pairs = 10000;
    Matrix S = build_S(L), T = build_T(L), U = build_U(L);
    std::vector<std::pair<std::string, Matrix>> mats{{"S", S}, {"T", T}, {"U", U}};
    for (int k = 1; k <= 5; ++k) mats.push_back({"W" + std::to_string(k), build_Wk(L, k)});
    auto vs = [](const Vec& v) {
        std::string s;
        for (auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
        return s;
    };
    for (int p = 0; p < pairs; ++p) {
        ++t.instances;
        Vec v(L), w(L);
        int s = uni(0, 4), e = uni(s, 7);
        for (int i = s; i <= e; ++i) v[i] = uni(1, 6);
        int rr = uni(0, 2), start = uni(s, e);
        for (int i = start; i <= e; ++i) {
            rr += uni(0, 2);
            w[i] = v[i] * rr;
        }
        if (w[e] != 0) {
            int ext = uni(0, 2);
            for (int i = e + 1; i <= e + ext; ++i) w[i] = uni(1, 6);
        }
        if (!is_admissible(w)) {
            std::fill(w.begin(), w.end(), BigInt(0));
            w[e] = 1;
        }
        if (!is_admissible(v) || !is_admissible(w) || !cc_leq(v, w)) {
            fail("generator", vs(v), vs(w));
            continue;
        }
        for (auto& [name, m] : mats) {
            ++t.counters["preservation_checks"];
            Vec mv = extlab::apply(m, v), mw = extlab::apply(m, w);
            if (!is_admissible(mv) || !is_admissible(mw) || !cc_leq(mv, mw)) fail(name + " on pair " + std::to_string(p), vs(v), vs(w));
        }
        for (int k = 1; k <= 4; ++k) {
            ++t.counters["monotone_checks"];
            if (!cc_leq(extlab::apply(build_Wk(L, k), v), extlab::apply(build_Wk(L, k + 1) * U, v)))
                fail("W_k v <=cc W_{k+1} U v, k=" + std::to_string(k), vs(v), "");
        }
    }
    r.notes["domain"] = "identities at N in {6,10}; " + std::to_string(pairs) + " random pairs, seed " + std::to_string(c.seed);
    return r;
}

SuiteReport suite_kappa(const RunConfig& c)
{
    SuiteReport r = make_report("kappa");
    std::vector<WidthTwoInstance> dom;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            if (c.chains && (a != c.chains->first || b != c.chains->second)) continue;
            if (!c.chains && a + b > c.max_n) continue;
            auto v = enumerate_width_two_posets(a, b, c.cap);
            dom.insert(dom.end(), v.begin(), v.end());
        }
    r.notes["domain"] = c.chains ? "regions with a=" + std::to_string(c.chains->first) + ", b=" + std::to_string(c.chains->second)
                                 : "regions with a,b <= 4 and a+b <= " + std::to_string(c.max_n);
    r.notes["dichotomy"] = "equality dichotomy counterexamples are recorded as findings";
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        LatticeRegion reg = region_of(w.poset, w.chains);
        PathCounter pc(reg, false);
        std::vector<Point> pts;
        for (int x = 0; x <= reg.a; ++x)
            for (int y = 0; y <= reg.b; ++y)
                if (reg.contains(Point{x, y})) pts.push_back({x, y});
        auto name = [](Point A, Point B, Point C, Point D, KappaCase k, const char* dir) {
            auto s = [](Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; };
            return std::string(dir) + (k == KappaCase::A ? "(a)" : "(b)") + " A=" + s(A) + " B=" + s(B) + " C=" + s(C) +
                   " D=" + s(D);
        };
        for (Point A : pts)
            for (Point B : pts)
                for (Point C : pts)
                    for (Point D : pts)
                        for (KappaCase k : {KappaCase::A, KappaCase::B}) {
                            int ab = A.y - B.y, cd = C.y - D.y;
                            bool vert = A.x == B.x && C.x == D.x && C.x >= A.x && ab >= 0 && cd >= 0 &&
                                        (k == KappaCase::A ? ab > cd : cd > ab);
                            if (vert) {
                                ++t.counters["vertical_quadruples"];
                                InjectionTable it = kappa_vertical(reg, A, B, C, D, k);
                                t.counters["path_pairs"] += static_cast<std::int64_t>(it.map.size());
                                if (!it.ok())
                                    t.violation(fail_with(name(A, B, C, D, k, "vertical"),
                                                          std::string(it.injective ? "" : "not injective ") +
                                                              (it.weight_preserved ? "" : "weight changed ") +
                                                              (it.in_target ? "" : "outside target"),
                                                          "ok", w.poset, w.chains));
                                if (!equality_dichotomy(pc, A, B, C, D, k)) {
                                    bool swap_only = k == KappaCase::A ? (B == A - e2 && C == D) : (A == B && D == C - e2);
                                    ++t.counters[swap_only ? "dichotomy_failures_trivial_swap" : "dichotomy_failures_other"];
                                    t.finding(fail_with(name(A, B, C, D, k, "dichotomy"), "equality, no stated condition",
                                                        "stated condition", w.poset, w.chains));
                                }
                            }
                            bool hor = A.y == B.y && A.x <= B.x && C.x == D.x && C.y <= D.y && C.y >= A.y &&
                                       (k == KappaCase::A ? B.x > A.x : D.y > C.y);
                            if (hor) {
                                ++t.counters["horizontal_quadruples"];
                                InjectionTable it = kappa_horizontal(reg, A, B, C, D, k);
                                t.counters["path_pairs"] += static_cast<std::int64_t>(it.map.size());
                                if (!it.ok())
                                    t.violation(fail_with(name(A, B, C, D, k, "horizontal"),
                                                          std::string(it.injective ? "" : "not injective ") +
                                                              (it.weight_preserved ? "" : "weight changed ") +
                                                              (it.in_target ? "" : "outside target"),
                                                          "ok", w.poset, w.chains));
                            }
                        }
    });
    return r;
}

// ---- search ----

SuiteReport search_general_cpc(const RunConfig& c)
{
    SuiteReport r = make_report("general-cpc", false);
    auto dom = poset_domain(c, 7);
    apply_budget(dom, c);
    r.notes["domain"] = domain_note(c, 7, "all") + ", all ordered triples, unsigned CPC and GCPC";
    r.tally = sweep(dom, c.jobs, [](const Poset& p, Tally& t) {
        ++t.instances;
        ExtensionSet es(p);
        for_each_triple(p.size(), [&](const ElementTriple& tr) {
            CorrelationTable tab = correlation_table(es, std::nullopt, tr, false);
            ++t.counters["tables"];
            Verdict v = check_gcpc_all(tab, GcpcRange::Positive);
            if (!v.holds) t.violation(annotate(v, p, std::nullopt, tr));
        });
    });
    return r;
}

std::vector<ChainDecomposition> all_two_chain_decompositions(const Poset& p)
{
    std::vector<ChainDecomposition> out;
    int n = p.size();
    auto is_chain = [&](Mask m) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if ((m >> x & 1) && (m >> y & 1) && !p.comparable(x, y)) return false;
        return true;
    };
    for (Mask m = 0; m < (Mask(1) << n); ++m) {
        if (!is_chain(m) || !is_chain(p.all() & ~m)) continue;
        ChainDecomposition d;
        for (int x = 0; x < n; ++x) (m >> x & 1 ? d.c1 : d.c2).push_back(x);
        auto by_rank = [&](int x, int y) { return p.less(x, y); };
        std::sort(d.c1.begin(), d.c1.end(), by_rank);
        std::sort(d.c2.begin(), d.c2.end(), by_rank);
        out.push_back(d);
    }
    return out;
}

SuiteReport search_decomposition_dependence(const RunConfig& c)
{
    SuiteReport r = make_report("q-cpc-decomposition-dependence", false);
    auto dom = width_two_domain(c, 8);
    apply_budget(dom, c);
    r.notes["domain"] = domain_note(c, 8, "width-two") + ", every two-chain partition";
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        ExtensionSet es(w.poset);
        auto decs = all_two_chain_decompositions(w.poset);
        t.counters["decompositions"] += static_cast<std::int64_t>(decs.size());
        for_each_triple(w.poset.size(), [&](const ElementTriple& tr) {
            std::optional<std::map<std::pair<int, int>, QPoly>> first;
            bool differs = false;
            for (auto& d : decs) {
                CorrelationTable tab = correlation_table(es, d, tr, false);
                for (auto& [key, poly] : tab.entries) {
                    if (!tab.entries.count({key.first + 1, key.second + 1})) continue;
                    Verdict v = check_qcpc(tab, key.first, key.second);
                    if (!v.holds) t.violation(annotate(v, w.poset, d, tr));
                }
                if (!first) first = tab.entries;
                else if (*first != tab.entries) differs = true;
            }
            ++t.counters["tables"];
            if (differs) ++t.counters["tables_depending_on_partition"];
        });
    });
    return r;
}

SuiteReport search_tp_minors(const RunConfig& c)
{
    SuiteReport r = make_report("tp-minors", false);
    auto dom = width_two_domain(c, 8);
    apply_budget(dom, c);
    r.notes["domain"] = domain_note(c, 8, "width-two") + ", 3x3 minors of F with the second index reversed";
    r.tally = sweep(dom, c.jobs, [](const WidthTwoInstance& w, Tally& t) {
        ++t.instances;
        int n = w.poset.size();
        if (n < 4) return;
        ExtensionSet es(w.poset);
        int m = n - 1;
        for_each_triple(n, [&](const ElementTriple& tr) {
            CorrelationTable tab = correlation_table(es, std::nullopt, tr, false);
            ++t.counters["tables"];
            // Fv(k, l) = F(k, m + 1 - l)
            std::vector<__int128> f(static_cast<size_t>(m) * m);
            std::vector<int> rows, cols;
            std::vector<char> rnz(m, 0), cnz(m, 0);
            for (auto& [key, poly] : tab.entries) {
                int k = key.first, l = m + 1 - key.second;
                if (k < 1 || k > m || l < 1 || l > m) continue;
                f[(k - 1) * m + (l - 1)] = static_cast<__int128>(poly.at_one().get_ui());
                rnz[k - 1] = cnz[l - 1] = 1;
            }
            for (int i = 0; i < m; ++i) {
                if (rnz[i]) rows.push_back(i);
                if (cnz[i]) cols.push_back(i);
            }
            auto F = [&](int i, int j) { return f[i * m + j]; };
            for (size_t a = 0; a < rows.size(); ++a)
                for (size_t b = a + 1; b < rows.size(); ++b)
                    for (size_t cc = b + 1; cc < rows.size(); ++cc)
                        for (size_t x = 0; x < cols.size(); ++x)
                            for (size_t y = x + 1; y < cols.size(); ++y)
                                for (size_t z = y + 1; z < cols.size(); ++z) {
                                    int r0 = rows[a], r1 = rows[b], r2 = rows[cc], c0 = cols[x], c1 = cols[y], c2 = cols[z];
                                    __int128 det = F(r0, c0) * (F(r1, c1) * F(r2, c2) - F(r1, c2) * F(r2, c1)) -
                                                   F(r0, c1) * (F(r1, c0) * F(r2, c2) - F(r1, c2) * F(r2, c0)) +
                                                   F(r0, c2) * (F(r1, c0) * F(r2, c1) - F(r1, c1) * F(r2, c0));
                                    ++t.counters["minors"];
                                    if (det < 0) {
                                        auto s = [](int v) { return std::to_string(v + 1); };
                                        t.violation(fail_with("rows " + s(r0) + "," + s(r1) + "," + s(r2) + " cols " +
                                                                  s(c0) + "," + s(c1) + "," + s(c2) + " (reversed)",
                                                              std::to_string(static_cast<long long>(det)), ">= 0",
                                                              w.poset, w.chains, tr));
                                    }
                                }
        });
    });
    return r;
}

using SuiteFn = SuiteReport (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table()
{
    static const std::vector<std::pair<std::string, SuiteFn>> t{
        {"nmatrix", suite_nmatrix},       {"bijection", suite_bijection},
        {"qcpc", suite_qcpc},             {"lattice", suite_lattice},
        {"gcpc-signed", suite_gcpc_signed}, {"equality", suite_equality},
        {"known-values", suite_known_values}, {"reduction", suite_reduction},
        {"stanley", suite_stanley},       {"minors", suite_minors},
        {"gyy-xyz", suite_gyy_xyz},       {"admissible", suite_admissible},
        {"kappa", suite_kappa},
    };
    return t;
}

}

Poset three_chain_example(int m)
{
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < m; ++i) {
        rel.emplace_back(i, i + 1);
        rel.emplace_back(m + i, m + i + 1);
    }
    return Poset::from_relations(2 * m + 1, rel);
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto& [n, f] : suite_table()) v.push_back(n);
        return v;
    }();
    return names;
}

bool known_suite(const std::string& name)
{
    if (name == "all") return true;
    for (auto& n : suite_names())
        if (n == name) return true;
    return false;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg)
{
    for (auto& [n, f] : suite_table())
        if (n == name) return f(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_verify(const RunConfig& cfg)
{
    if (!known_suite(cfg.suite)) throw std::invalid_argument("unknown suite: " + cfg.suite);
    std::vector<SuiteReport> out;
    if (cfg.suite == "all")
        for (auto& n : suite_names()) out.push_back(run_suite(n, cfg));
    else
        out.push_back(run_suite(cfg.suite, cfg));
    return out;
}

const std::vector<std::string>& search_scopes()
{
    static const std::vector<std::string> s{"general-cpc", "q-cpc-decomposition-dependence", "tp-minors"};
    return s;
}

SuiteReport search_counterexample(const std::string& scope, const RunConfig& cfg)
{
    if (scope == "general-cpc") return search_general_cpc(cfg);
    if (scope == "q-cpc-decomposition-dependence") return search_decomposition_dependence(cfg);
    if (scope == "tp-minors") return search_tp_minors(cfg);
    throw std::invalid_argument("unknown scope: " + scope);
}

json witness_json(const Witness& w)
{
    return json{{"poset", w.poset}, {"decomposition", w.decomposition}, {"triple", w.triple},
                {"indices", w.indices}, {"lhs", w.lhs},   {"rhs", w.rhs}};
}

json report_json(const SuiteReport& r)
{
    json j;
    j["scope"] = r.name;
    j["theorem_backed"] = r.theorem_backed;
    j["ok"] = r.ok();
    j["instances_checked"] = r.tally.instances;
    j["violations_total"] = r.tally.violations_total;
    j["violations"] = json::array();
    for (auto& w : r.tally.violations) j["violations"].push_back(witness_json(w));
    if (r.tally.findings_total) {
        j["findings_total"] = r.tally.findings_total;
        j["findings"] = json::array();
        for (auto& w : r.tally.findings) j["findings"].push_back(witness_json(w));
    }
    json data = r.notes;
    for (auto& [k, v] : r.tally.counters) data[k] = v;
    j["data"] = data;
    return j;
}

static json config_json(const RunConfig& cfg)
{
    json c;
    c["max_n"] = cfg.max_n;
    if (cfg.chains) c["chains"] = {cfg.chains->first, cfg.chains->second};
    c["seed"] = cfg.seed;
    if (cfg.budget) c["budget"] = *cfg.budget;
    return c;
}

json verify_body(const RunConfig& cfg, const std::vector<SuiteReport>& rs)
{
    json b;
    b["command"] = "verify";
    b["config"] = config_json(cfg);
    b["config"]["suite"] = cfg.suite;
    bool ok = true;
    b["suites"] = json::array();
    for (auto& r : rs) {
        ok = ok && r.ok();
        b["suites"].push_back(report_json(r));
    }
    b["ok"] = ok;
    return b;
}

json search_body(const RunConfig& cfg, const SuiteReport& r)
{
    json b = report_json(r);
    b.erase("theorem_backed");
    b.erase("ok");
    json out;
    out["command"] = "search";
    out["config"] = config_json(cfg);
    for (auto& [k, v] : b.items()) out[k] = v;
    return out;
}

static std::string csv_field(const std::string& s)
{
    std::string o = "\"";
    for (char ch : s) {
        if (ch == '"') o += '"';
        o += ch;
    }
    return o + "\"";
}

std::string reports_csv(const std::vector<SuiteReport>& rs)
{
    std::ostringstream os;
    os << "scope,kind,poset,decomposition,triple,indices,lhs,rhs\n";
    for (auto& r : rs) {
        auto row = [&](const char* kind, const Witness& w) {
            os << csv_field(r.name) << "," << kind << "," << csv_field(w.poset) << "," << csv_field(w.decomposition)
               << "," << csv_field(w.triple) << "," << csv_field(w.indices) << "," << csv_field(w.lhs) << ","
               << csv_field(w.rhs) << "\n";
        };
        for (auto& w : r.tally.violations) row("violation", w);
        for (auto& w : r.tally.findings) row("finding", w);
    }
    return os.str();
}

std::string reports_text(const std::vector<SuiteReport>& rs)
{
    std::ostringstream os;
    for (auto& r : rs) {
        os << (r.ok() ? "ok    " : "FAIL  ") << r.name << ": " << r.tally.instances << " instances, "
           << r.tally.violations_total << (r.theorem_backed ? " violations" : " findings");
        if (r.tally.findings_total) os << ", " << r.tally.findings_total << " findings";
        os << "\n";
        for (auto& w : r.tally.violations)
            os << "      " << w.poset << " [" << w.decomposition << "] " << w.triple << " " << w.indices << ": " << w.lhs
               << " vs " << w.rhs << "\n";
    }
    return os.str();
}

}
