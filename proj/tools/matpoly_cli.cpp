/*
   Copyright 2026 The matpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// matpoly: command-line front end. One JSON object on stdout per run.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matpoly/io.hpp"
#include "matpoly/leaves.hpp"
#include "matpoly/poisson.hpp"
#include "matpoly/smith.hpp"
#include "matpoly/spectral.hpp"
#include "matpoly/verify.hpp"

using namespace matpoly;
using io::InputError;
using io::Json;

namespace {

constexpr std::uint64_t default_seed = 20260101;

enum Exit { ok = 0, domain_error = 1, input_error = 2 };

struct Globals {
    std::uint64_t seed = default_seed;
    Tolerances tol;
};

io::MatPolyDocument read_document(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("io", "cannot open input file", path);
        buf << in.rdbuf();
    }
    try {
        return io::parse_document(buf.str());
    } catch (InputError& e) {
        throw InputError(e.kind(), e.what(), path + (e.location().empty() ? "" : "#" + e.location()));
    }
}

Json parse_flag(const std::string& text, const std::string& flag) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError("parse", e.what(), flag);
    }
}

Complex complex_flag(const std::string& text, const std::string& flag) {
    return io::complex_from_json(parse_flag(text, flag), flag);
}

OrderedPartition partition_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) io::parse_fail("partition must be an array of blocks", where);
    OrderedPartition L;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string b = where + "/" + std::to_string(i);
        if (!j[i].is_array()) io::parse_fail("block must be an array", b);
        std::vector<Complex> block;
        for (std::size_t k = 0; k < j[i].size(); ++k) block.push_back(io::complex_from_json(j[i][k], b + "/" + std::to_string(k)));
        L.push_back(std::move(block));
    }
    return L;
}

Json partition_to_json(const OrderedPartition& L) {
    Json a = Json::array();
    for (const auto& b : L) a.push_back(io::to_json(b));
    return a;
}

/// Consecutive blocks of the sorted spectrum.
OrderedPartition default_partition(const Spectrum& s, std::size_t m) {
    OrderedPartition L;
    for (std::size_t k = 0; k < s.values.size(); k += m)
        L.emplace_back(s.values.begin() + static_cast<long>(k), s.values.begin() + static_cast<long>(k + m));
    return L;
}

Json factorization_to_json(const Factorization& F) {
    Json j;
    j["partition"] = partition_to_json(F.partition);
    j["factors"] = io::to_json(F.factors);
    if (!F.condition.empty()) j["condition"] = F.condition;
    j["residuals"] = {{"reconstruction", F.residual}, {"spectral", F.spectral_error}};
    return j;
}

Json spectrum_to_json(const Spectrum& s) {
    Json j;
    j["values"] = io::to_json(s.values);
    j["residuals"] = s.residuals;
    j["separation"] = s.separation;
    j["generic"] = s.generic;
    return j;
}

// ---- commands --------------------------------------------------------------

Json cmd_snf(const std::string& input) {
    const auto doc = read_document(input);
    const auto M = io::to_matpoly<Rational>(doc);
    const auto S = smith_normal_form(M);
    Json j;
    j["command"] = "snf";
    Json inv = Json::array();
    for (const auto& d : S.invariants) inv.push_back(to_string(d));
    j["invariants"] = std::move(inv);
    j["invariant_polynomials"] = io::to_json(S.invariants);
    j["U"] = io::to_json(S.U);
    j["D"] = io::to_json(S.D);
    j["V"] = io::to_json(S.V);
    return j;
}

Json cmd_classify(const std::string& input) {
    const auto S = classify(io::to_matpoly<Rational>(read_document(input)));
    Json j;
    j["command"] = "classify";
    const Json desc = io::to_json(S);
    for (const auto& [k, v] : desc.items()) j[k] = v;
    Json q = Json::array();
    for (const auto& p : sl_reduce(S).q) q.push_back(to_string(p));
    j["sl_reduced"] = std::move(q);
    return j;
}

Json cmd_closure(const std::string& input, const std::string& other) {
    const auto S = classify(io::to_matpoly<Rational>(read_document(input)));
    const auto T = classify(io::to_matpoly<Rational>(read_document(other)));
    Json j;
    j["command"] = "closure";
    j["contains"] = closure_contains(S, T);
    j["contained_in"] = closure_contains(T, S);
    j["leaf"] = io::to_json(S);
    j["other"] = io::to_json(T);
    return j;
}

Json cmd_drinfeld(const std::string& input, double sep) {
    const auto doc = read_document(input);
    Json j;
    j["command"] = "drinfeld";
    Json entries = Json::array();
    if (doc.field == io::FieldKind::rational) {
        const auto chart = drinfeld_coordinates(io::to_matpoly<Rational>(doc), sep);
        for (const auto& e : chart.entries) {
            Json x;
            x["index"] = e.index;
            x["a"] = io::to_json(e.a);
            x["b"] = io::to_json(e.b);
            x["numerator"] = io::to_json(e.numerator);
            x["denominator"] = io::to_json(e.denominator);
            x["k"] = e.k;
            x["poles"] = io::to_json(e.poles);
            x["simple_poles"] = e.simple_poles;
            entries.push_back(std::move(x));
        }
        j["entries"] = std::move(entries);
        j["in_open_subset"] = chart.in_open_subset;
        j["note"] = chart.note;
    } else {
        const auto chart = drinfeld_coordinates(io::to_matpoly<Complex>(doc), sep);
        for (const auto& e : chart.entries) {
            Json x;
            x["index"] = e.index;
            x["a"] = io::to_json(e.a);
            x["b"] = io::to_json(e.b);
            x["k"] = e.k;
            x["poles"] = io::to_json(e.poles);
            x["simple_poles"] = e.simple_poles;
            entries.push_back(std::move(x));
        }
        j["entries"] = std::move(entries);
        j["in_open_subset"] = chart.in_open_subset;
        j["note"] = chart.note;
    }
    return j;
}

Factorization factor_with(const CMatPoly& P, const std::string& partition, const Tolerances& tol) {
    const auto L = partition.empty() ? default_partition(spectrum(P, tol), P.size())
                                     : partition_from_json(parse_flag(partition, "--partition"), "--partition");
    return factorize(P, L, tol);
}

Json cmd_factor(const std::string& input, const std::string& partition, const Tolerances& tol) {
    const auto P = io::to_matpoly<Complex>(read_document(input));
    const auto s = spectrum(P, tol);
    Json j;
    j["command"] = "factor";
    j["spectrum"] = spectrum_to_json(s);
    const Json fj = factorization_to_json(factor_with(P, partition, tol));
    for (const auto& [k, v] : fj.items()) j[k] = v;
    return j;
}

Json cmd_swap(const std::string& input, const std::string& partition, std::size_t left, const std::string& lambda,
              const std::string& mu, const Tolerances& tol) {
    const auto P = io::to_matpoly<Complex>(read_document(input));
    const auto F = factor_with(P, partition, tol);
    if (left < 1 || left >= F.factors.size()) throw InputError("usage", "--left must be in 1 … n-1", "--left");
    const auto r = swap_adjacent(F.factors[left - 1], F.factors[left], complex_flag(lambda, "--lambda"),
                                 complex_flag(mu, "--mu"), tol);
    auto after = F.factors;
    after[left - 1] = r.A;
    after[left] = r.B;
    Json j;
    j["command"] = "swap";
    j["left"] = left;
    j["before"] = io::to_json(F.factors);
    j["after"] = io::to_json(after);
    j["residuals"] = {{"pair_product", r.product_residual}, {"reconstruction", relative_residual(product(after), P)}};
    return j;
}

Json cmd_orbit(const std::string& input, const std::string& sequence, const Tolerances& tol) {
    const auto P = io::to_matpoly<Complex>(read_document(input));
    const Json seq = parse_flag(sequence, "--sequence");
    if (!seq.is_array() || seq.empty()) throw InputError("parse", "sequence must be a non-empty array of partitions", "--sequence");
    Factorization F = factorize(P, partition_from_json(seq[0], "--sequence/0"), tol);
    Json steps = Json::array();
    Json first = factorization_to_json(F);
    first["swaps"] = Json::array();
    steps.push_back(std::move(first));
    for (std::size_t k = 1; k < seq.size(); ++k) {
        const auto t = transition(F, partition_from_json(seq[k], "--sequence/" + std::to_string(k)), tol);
        F = t.result;
        Json s = factorization_to_json(F);
        s["residuals"]["reconstruction"] = relative_residual(product(F.factors), P);
        Json swaps = Json::array();
        for (const auto& w : t.swaps)
            swaps.push_back({{"left", w.left + 1}, {"lambda", io::to_json(w.lambda)}, {"mu", io::to_json(w.mu)}});
        s["swaps"] = std::move(swaps);
        steps.push_back(std::move(s));
    }
    Json j;
    j["command"] = "orbit";
    j["steps"] = std::move(steps);
    return j;
}

CoordIndex coord_from_1based(long i, long j, long r, std::size_t m, std::size_t n) {
    if (i < 1 || j < 1 || r < 1 || static_cast<std::size_t>(i) > m || static_cast<std::size_t>(j) > m ||
        static_cast<std::size_t>(r) > n)
        fail(Errc::index_out_of_range, "coordinate index out of range");
    return {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), static_cast<std::size_t>(r)};
}

template <class T>
Json bracket_json(const io::MatPolyDocument& doc, const std::vector<long>& indices) {
    const auto P = io::to_point<T>(doc);
    const std::size_t m = P.size(), n = P.order();
    Json j;
    j["command"] = "bracket";
    if (!indices.empty()) {
        if (indices.size() != 6) throw InputError("usage", "--indices takes i,j,r,k,l,s", "--indices");
        const auto a = coord_from_1based(indices[0], indices[1], indices[2], m, n);
        const auto b = coord_from_1based(indices[3], indices[4], indices[5], m, n);
        j["indices"] = indices;
        j["value"] = io::to_json(bracket_tt(P, a, b));
        return j;
    }
    Json labels = Json::array(), table = Json::array();
    std::vector<CoordIndex> idx;
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                idx.push_back({a, b, r});
                labels.push_back({a + 1, b + 1, r});
            }
    for (const auto& a : idx) {
        Json row = Json::array();
        for (const auto& b : idx) row.push_back(io::to_json(bracket_tt(P, a, b)));
        table.push_back(std::move(row));
    }
    j["coordinates"] = std::move(labels);
    j["table"] = std::move(table);
    return j;
}

Json cmd_bracket(const std::string& input, const std::vector<long>& indices) {
    const auto doc = read_document(input);
    return doc.field == io::FieldKind::rational ? bracket_json<Rational>(doc, indices)
                                                : bracket_json<Complex>(doc, indices);
}

Json cmd_flow(const std::string& input, const std::string& hamiltonian, double time, double step,
              double max_step_drift, std::size_t record_every) {
    const auto doc = read_document(input);
    const auto P = io::to_point<Complex>(doc);
    const Json hj = parse_flag(hamiltonian, "--hamiltonian");
    if (!hj.is_array() || hj.empty()) throw InputError("parse", "hamiltonian must be an array of matrices", "--hamiltonian");
    PlusPolyMat<Complex> A;
    for (std::size_t k = 0; k < hj.size(); ++k)
        A.coeffs.push_back(io::matrix_from_json<Complex>(hj[k], P.size(), "--hamiltonian/" + std::to_string(k)));
    FlowOptions opts;
    opts.max_step_drift = max_step_drift;
    opts.record_every = record_every == 0 ? std::numeric_limits<std::size_t>::max() : record_every;
    const auto res = flow_integrate(P, A, time, step, opts);

    const std::size_t n = P.order();
    const auto before = find_roots(det(zinv_to_z(P, n))).roots;
    const auto after = find_roots(det(zinv_to_z(res.trajectory.back(), n))).roots;
    Json j;
    j["command"] = "flow";
    j["steps"] = res.steps;
    j["endpoint"] = io::to_json(io::make_document(res.trajectory.back().coeffs(), P.size(), n, io::Variable::z_inv));
    if (record_every != 0) {
        Json traj = Json::array();
        for (std::size_t k = 0; k < res.trajectory.size(); ++k)
            traj.push_back({{"t", res.times[k]}, {"coeffs", io::to_json(res.trajectory[k].coeffs())}});
        j["trajectory"] = std::move(traj);
    }
    j["det_drift"] = res.det_drift;
    j["residuals"] = {{"max_det_drift", res.max_drift}, {"spectrum_shift", match_multisets(before, after).max_distance}};
    return j;
}

Json check_json(const verify::CheckResult& c) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["failed"] = c.failed;
    j["worst"] = c.worst;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

/// Checks applicable to a single document: Smith form validity for rational
/// input, factorization over the default partition for generic input.
std::vector<verify::CheckResult> fixture_checks(const io::MatPolyDocument& doc, const Tolerances& tol) {
    std::vector<verify::CheckResult> out;
    if (doc.field == io::FieldKind::rational) {
        verify::CheckResult c;
        c.name = "snf";
        const auto M = io::to_matpoly<Rational>(doc);
        const auto why = verify::smith_defect(M, smith_normal_form(M));
        c.record(why.empty(), why);
        out.push_back(std::move(c));
    }
    const auto P = io::to_matpoly<Complex>(doc);
    if (is_monic_of_degree(P, doc.n) && doc.n > 0) {
        const auto s = spectrum(P, tol);
        if (s.generic) {
            verify::CheckResult c;
            c.name = "factor";
            try {
                const auto F = factorize(P, default_partition(s, P.size()), tol);
                c.observe(F.residual, 1e-8, "reconstruction residual");
            } catch (const Error& e) {
                // an excluded default chart is a property of the input, not a failure
                c.record(e.code() == Errc::chart_excluded, e.what());
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::pair<Json, bool> cmd_verify(const std::string& suite, const std::vector<std::string>& fixtures, const Globals& g) {
    const auto rep = verify::run_suite(suite, g.seed, g.tol);
    Json j;
    j["command"] = "verify";
    j["suite"] = suite;
    j["seed"] = g.seed;
    std::size_t passed = 0, failed = 0;
    bool good = rep.ok();
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        checks.push_back(check_json(c));
        passed += c.passed;
        failed += c.failed;
    }
    j["checks"] = std::move(checks);
    Json fx = Json::array();
    for (const auto& path : fixtures) {
        Json f;
        f["file"] = path;
        Json cs = Json::array();
        for (const auto& c : fixture_checks(read_document(path), g.tol)) {
            cs.push_back(check_json(c));
            passed += c.passed;
            failed += c.failed;
            good = good && c.failed == 0;
        }
        f["checks"] = std::move(cs);
        fx.push_back(std::move(f));
    }
    if (!fixtures.empty()) j["fixtures"] = std::move(fx);
    j["passed"] = passed;
    j["failed"] = failed;
    j["ok"] = good;
    return {j, good};
}

int emit_error(const std::string& kind, const std::string& message, const std::string& location, int code) {
    Json err;
    err["error"] = {{"kind", kind}, {"message", message}, {"location", location}};
    std::cout << err.dump(2) << '\n';
    std::cerr << "matpoly: " << kind << ": " << message << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matpoly: Smith forms, symplectic leaves, r-matrix brackets and spectral factorization"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "random seed for verify")->envname("MATPOLY_SEED");
    app.add_option("--eps-sep", g.tol.sep, "genericity threshold for eigenvalue separation");
    app.add_option("--kappa-max", g.tol.kappa_max, "maximum eigenvector condition number");
    app.add_option("--eps-ip", g.tol.ip, "relative inner-product degeneracy threshold");
    app.add_option("--tol-div", g.tol.div, "relative right-division remainder bound");
    app.add_option("--tol-eig", g.tol.eig, "relative eigenvector residual bound");

    std::string input, other, partition, lambda, mu, sequence, hamiltonian, suite = "all";
    std::vector<std::string> fixtures;
    std::vector<long> indices;
    std::size_t left = 1, record_every = 0;
    double sep = 1e-6, time = 1.0, step = 1e-3, max_step_drift = 1e-6;

    auto* snf = app.add_subcommand("snf", "Smith normal form U·D·V of a rational matrix polynomial");
    snf->add_option("input", input, "document path or -")->required();
    auto* cls = app.add_subcommand("classify", "symplectic leaf descriptor of a monic polynomial");
    cls->add_option("input", input)->required();
    auto* clo = app.add_subcommand("closure", "whether the leaf of <other> lies in the closure of the leaf of <input>");
    clo->add_option("input", input)->required();
    clo->add_option("other", other)->required();
    auto* dri = app.add_subcommand("drinfeld", "Drinfeld minors and pole/residue coordinates");
    dri->add_option("input", input)->required();
    dri->add_option("--separation", sep, "minimum pole separation");
    auto* fac = app.add_subcommand("factor", "factorize into linear factors over an ordered partition");
    fac->add_option("input", input)->required();
    fac->add_option("--partition", partition, "JSON blocks, e.g. [[1,2],[3,[0,1]]]");
    auto* swp = app.add_subcommand("swap", "exchange eigenvalues between adjacent factors");
    swp->add_option("input", input)->required();
    swp->add_option("--partition", partition);
    swp->add_option("--left", left, "1-based index of the left factor");
    swp->add_option("--lambda", lambda, "eigenvalue leaving the left factor")->required();
    swp->add_option("--mu", mu, "eigenvalue leaving the right factor")->required();
    auto* orb = app.add_subcommand("orbit", "chain of transition maps through a sequence of partitions");
    orb->add_option("input", input)->required();
    orb->add_option("--sequence", sequence, "JSON array of partitions")->required();
    auto* brk = app.add_subcommand("bracket", "Poisson bracket of coefficient coordinates");
    brk->add_option("input", input)->required();
    brk->add_option("--indices", indices, "i,j,r,k,l,s (1-based); full table when omitted")->delimiter(',');
    auto* flo = app.add_subcommand("flow", "RK4 integration of the dressing flow");
    flo->add_option("input", input)->required();
    flo->add_option("--hamiltonian", hamiltonian, "JSON array of matrices A_0, A_-1, ...")->required();
    flo->add_option("--time", time);
    flo->add_option("--step", step);
    flo->add_option("--max-step-drift", max_step_drift);
    flo->add_option("--record-every", record_every, "emit every k-th point (0: endpoint only)");
    auto* ver = app.add_subcommand("verify", "run property suites");
    ver->add_option("--suite", suite)->check(CLI::IsMember({"snf", "poisson", "factor", "all"}));
    ver->add_option("fixtures", fixtures, "documents to check as well");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("usage", e.what(), "", input_error);
    }

    try {
        Json out;
        int code = ok;
        if (*snf) out = cmd_snf(input);
        else if (*cls) out = cmd_classify(input);
        else if (*clo) out = cmd_closure(input, other);
        else if (*dri) out = cmd_drinfeld(input, sep);
        else if (*fac) out = cmd_factor(input, partition, g.tol);
        else if (*swp) out = cmd_swap(input, partition, left, lambda, mu, g.tol);
        else if (*orb) out = cmd_orbit(input, sequence, g.tol);
        else if (*brk) out = cmd_bracket(input, indices);
        else if (*flo) out = cmd_flow(input, hamiltonian, time, step, max_step_drift, record_every);
        else if (*ver) {
            auto [j, good] = cmd_verify(suite, fixtures, g);
            out = std::move(j);
            code = good ? ok : domain_error;
        }
        std::cout << out.dump(2) << '\n';
        return code;
    } catch (const InputError& e) {
        return emit_error(e.kind(), e.what(), e.location(), input_error);
    } catch (const Error& e) {
        return emit_error(std::string(e.kind()), e.what(), input, domain_error);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), "", domain_error);
    }
}
