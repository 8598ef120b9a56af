// Command line interface: enumerate families, verify identities, run
// bijections, and diff independent counting methods.
//
// Exit codes: 0 success, 1 usage or input error, 2 a mathematical identity
// check failed (a finding, not a tool error).

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cylschur/growth.hpp"
#include "cylschur/littlewood.hpp"
#include "cylschur/matching.hpp"
#include "cylschur/minor_summation.hpp"
#include "cylschur/motzkin.hpp"
#include "cylschur/parallel.hpp"
#include "cylschur/periodic_kernels.hpp"
#include "cylschur/serialize.hpp"
#include "cylschur/tableau.hpp"
#include "cylschur/vacillating.hpp"

using namespace cylschur;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;

enum class Output { json, csv, text };

Output parse_output(const std::string& s) {
    if (s == "json") return Output::json;
    if (s == "csv") return Output::csv;
    if (s == "text") return Output::text;
    throw CLI::ValidationError("--output must be json, csv or text");
}

// Half-integer parameters like 1.5 arrive as strings and are stored
// doubled; plain integers double transparently.
int parse_half_doubled(const std::string& s) {
    size_t dot = s.find('.');
    if (dot == std::string::npos) return 2 * std::stoi(s);
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac != "5") throw CLI::ValidationError("half-integers must end in .5");
    return 2 * std::stoi(whole) + 1;
}

struct CountRow {
    std::string key;
    std::string value;
};

void print_rows(const std::vector<CountRow>& rows, Output out) {
    switch (out) {
        case Output::json: {
            json j = json::array();
            for (auto& r : rows) j.push_back({{"key", r.key}, {"value", r.value}});
            std::cout << j.dump() << "\n";
            break;
        }
        case Output::csv:
            std::cout << "key,value\n";
            for (auto& r : rows) std::cout << r.key << "," << r.value << "\n";
            break;
        case Output::text:
            for (auto& r : rows) std::cout << r.key << "  " << r.value << "\n";
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cylindric Schur function toolkit"};
    app.require_subcommand(1);
    // --h is a parameter name throughout, so help is --help only
    app.set_help_flag("--help", "print help");
    std::string output_str = "text";
    app.add_option("--output", output_str, "output format: json|csv|text")
        ->capture_default_str();
    unsigned long seed = 20260809;
    app.add_option("--seed", seed, "seed for randomized checks");

    // ---- count ----------------------------------------------------------
    auto* count = app.add_subcommand("count", "count a combinatorial family");
    count->set_help_flag("--help", "print help");
    count->fallthrough();
    std::string family;
    int c_n = 0, c_h = 1, c_w = 1;
    std::string c_r = "2", c_s = "2";
    std::string method = "";
    count->add_option("--family", family,
                      "csyt|ncnn|ncnn-prime-signed|vt|vt-signed|matchings|"
                      "triangle|motzkin|motzkin-prime|motzkin-1|motzkin-2|"
                      "motzkin-3|motzkin-2-signed|dyck-prefix|updown-path")
        ->required();
    count->add_option("--n", c_n, "size")->required();
    count->add_option("--h", c_h, "height parameter");
    count->add_option("--w", c_w, "width parameter");
    count->add_option("--r", c_r, "crossing bound (may be half-integral)");
    count->add_option("--s", c_s, "nesting bound (may be half-integral)");
    count->add_option("--method", method, "counting method where applicable");

    // ---- enumerate ------------------------------------------------------
    auto* enumerate =
        app.add_subcommand("enumerate", "list the members of a family");
    enumerate->set_help_flag("--help", "print help");
    enumerate->fallthrough();
    std::string e_family;
    int e_n = 0, e_h = 1, e_w = 1, e_max_size = 6, e_max_entry = 3;
    std::string e_shape, e_kind = "rst";
    enumerate
        ->add_option("--family", e_family, "partitions|tableaux|matchings|vt")
        ->required();
    enumerate->add_option("--n", e_n, "size");
    enumerate->add_option("--h", e_h, "height parameter");
    enumerate->add_option("--w", e_w, "width parameter (<= 0: unbounded)");
    enumerate->add_option("--max-size", e_max_size, "partition size bound");
    enumerate->add_option("--max-entry", e_max_entry, "largest tableau entry");
    enumerate->add_option("--shape", e_shape, "partition as JSON, e.g. [4,3,2]");
    enumerate->add_option("--kind", e_kind, "tableau kind: ssyt|rst");

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "verify an identity");
    verify->set_help_flag("--help", "print help");
    verify->fallthrough();
    std::string v_identity;
    int v_h = 1, v_w = 1, v_vars = 2, v_deg = 6, v_nn = 4;
    verify
        ->add_option("--identity", v_identity,
                     "abl-odd|abl-even|c-plus|c-minus|d1..d4|classical-*|"
                     "kernel-chain|framework")
        ->required();
    verify->add_option("--h", v_h, "h parameter");
    verify->add_option("--w", v_w, "w parameter");
    verify->add_option("--N", v_nn, "period for the kernel chain");
    verify->add_option("--vars", v_vars, "number of variables");
    verify->add_option("--deg", v_deg, "degree cap");
    bool v_timings = false;
    verify->add_flag("--timings", v_timings, "include elapsed ms in reports");

    // ---- biject ---------------------------------------------------------
    auto* biject = app.add_subcommand("biject", "apply a bijection");
    biject->set_help_flag("--help", "print help");
    biject->fallthrough();
    std::string b_map, b_input;
    int b_h = 1, b_w = 1;
    biject
        ->add_option("--map", b_map,
                     "cyl-transpose|transpose-tableau|chen-phi|chen-phi-inv|"
                     "syt-matching|matching-syt|matching-vt|matching-vt-star|"
                     "ncnn-symmetry|matching-motzkin|motzkin-matching|"
                     "dershowitz|dershowitz-inv|psi|special-involution|"
                     "csyt-triangle|triangle-csyt|csyt-dyck|dyck-csyt")
        ->required();
    biject->add_option("--input", b_input, "object as JSON or step string")
        ->required();
    biject->add_option("--h", b_h, "h parameter");
    biject->add_option("--w", b_w, "w parameter");

    // ---- oracle-diff ----------------------------------------------------
    auto* oracle = app.add_subcommand(
        "oracle-diff", "tabulate two methods for one quantity over a grid");
    oracle->set_help_flag("--help", "print help");
    oracle->fallthrough();
    std::string o_quantity;
    int o_nmax = 6, o_hmax = 2, o_wmax = 2, o_trials = 100;
    oracle
        ->add_option("--quantity", o_quantity,
                     "csyt|ncnn-bessel|vt|quantum-kostka|pfaffian-det|gordon|"
                     "minor-summation")
        ->required();
    oracle->add_option("--n-max", o_nmax, "grid bound on n");
    oracle->add_option("--h-max", o_hmax, "grid bound on h");
    oracle->add_option("--w-max", o_wmax, "grid bound on w");
    oracle->add_option("--trials", o_trials, "randomized trial count");
    oracle->add_option("--method", method, "second method for csyt: brute|factorial");

    CLI11_PARSE(app, argc, argv);
    Output out;
    try {
        out = parse_output(output_str);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*count) {
            Int value;
            if (family == "csyt") {
                CsytMethod m = CsytMethod::chain_dp;
                if (method == "brute") m = CsytMethod::brute;
                if (method == "factorial") m = CsytMethod::factorial_formula;
                value = csyt_count(c_n, c_h, c_w, m);
            } else if (family == "ncnn") {
                value = ncnn_count(c_n, parse_half_doubled(c_r),
                                   parse_half_doubled(c_s));
            } else if (family == "ncnn-prime-signed") {
                value = ncnn_prime_signed(c_n, c_h, c_w);
            } else if (family == "vt") {
                value = vt_count(c_n, c_h, c_w, VtVariant::plain);
            } else if (family == "vt-signed") {
                value = vt_signed_count(c_n, c_h, c_w);
            } else if (family == "matchings") {
                value = count_matchings(c_n);
            } else if (family == "motzkin-2-signed") {
                value = motzkin2_signed_sum(c_n, c_w);
            } else {
                std::map<std::string, PathFamily> fams{
                    {"triangle", PathFamily::triangle},
                    {"motzkin", PathFamily::motzkin},
                    {"motzkin-prime", PathFamily::motzkin_prime},
                    {"motzkin-1", PathFamily::motzkin_1},
                    {"motzkin-2", PathFamily::motzkin_2},
                    {"motzkin-3", PathFamily::motzkin_3},
                    {"dyck-prefix", PathFamily::dyck_prefix},
                    {"updown-path", PathFamily::updown_path}};
                auto it = fams.find(family);
                if (it == fams.end()) {
                    std::cerr << "unknown family: " << family << "\n";
                    return kExitUsage;
                }
                value = method == "enumerate"
                            ? count_family_enumerated(it->second, c_n, c_w)
                            : count_family(it->second, c_n, c_w);
            }
            print_rows({{family, value.get_str()}}, out);
            return kExitOk;
        }

        if (*enumerate) {
            json items = json::array();
            if (e_family == "partitions") {
                Width width = e_w > 0 ? Width(e_w) : std::nullopt;
                for (auto& p : iter_family(e_h, width, e_max_size))
                    items.push_back(to_json(p));
            } else if (e_family == "tableaux") {
                Partition shape = partition_from_json(json::parse(e_shape));
                TableauKind kind =
                    e_kind == "ssyt" ? TableauKind::ssyt : TableauKind::rst;
                for (auto& t :
                     enumerate_cylindric(shape, e_h, e_w, kind, e_max_entry))
                    items.push_back(to_json(t));
            } else if (e_family == "matchings") {
                for_each_matching(
                    e_n, [&](const Matching& m) { items.push_back(to_json(m)); });
            } else if (e_family == "vt") {
                for_each_vt(e_n, e_h, e_w, VtVariant::plain,
                            [&](const VtChain& c) { items.push_back(to_json(c)); });
            } else {
                std::cerr << "unknown family: " << e_family << "\n";
                return kExitUsage;
            }
            if (out == Output::json) {
                std::cout << items.dump() << "\n";
            } else {
                for (auto& i : items) std::cout << i.dump() << "\n";
            }
            return kExitOk;
        }

        if (*verify) {
            if (v_identity == "kernel-chain") {
                auto rep = verify_periodic_kernel_chain(v_h, v_nn, v_vars, v_deg);
                json checks = json::array();
                for (auto& c : rep.checks)
                    checks.push_back({{"name", c.name},
                                      {"ran", c.ran},
                                      {"ok", c.ok}});
                json j{{"all_ok", rep.all_ok}, {"checks", checks}};
                if (out == Output::text) {
                    for (auto& c : rep.checks)
                        std::printf("%-24s %s\n", c.name.c_str(),
                                    !c.ran ? "skipped (hypothesis fails)"
                                           : (c.ok ? "ok" : "FAILED"));
                } else {
                    std::cout << j.dump() << "\n";
                }
                return rep.all_ok ? kExitOk : kExitFinding;
            }
            auto id = identity_from_name(v_identity);
            if (!id) {
                std::cerr << "unknown identity: " << v_identity << "\n";
                return kExitUsage;
            }
            auto rep = verify_identity(*id, v_h, v_w, v_vars, v_deg);
            if (out == Output::text) {
                std::printf("%s h=%d w=%d vars=%d deg=%d: %s\n",
                            identity_name(*id), v_h, v_w, v_vars, v_deg,
                            rep.equal ? "equal" : "NOT equal");
                if (rep.first_discrepancy)
                    std::printf("  first discrepancy lhs=%s rhs=%s\n",
                                rep.first_discrepancy->lhs.get_str().c_str(),
                                rep.first_discrepancy->rhs.get_str().c_str());
            } else if (out == Output::json) {
                std::cout << to_json(rep, v_timings).dump() << "\n";
            } else {
                std::cout << "identity,h,w,vars,deg,equal\n"
                          << identity_name(*id) << "," << v_h << "," << v_w
                          << "," << v_vars << "," << v_deg << ","
                          << (rep.equal ? "true" : "false") << "\n";
            }
            return rep.equal ? kExitOk : kExitFinding;
        }

        if (*biject) {
            json in;
            if (!b_input.empty() && (b_input[0] == '[' || b_input[0] == '{'))
                in = json::parse(b_input);
            json result;
            if (b_map == "cyl-transpose") {
                result = to_json(cyl_transpose(partition_from_json(in), b_h, b_w));
            } else if (b_map == "transpose-tableau") {
                Tableau t = tableau_from_json(in);
                TableauKind kind = t.is_valid(TableauKind::rst)
                                       ? TableauKind::rst
                                       : TableauKind::ssyt;
                result = to_json(transpose_tableau(t, b_h, b_w, kind));
            } else if (b_map == "chen-phi") {
                result = to_json(chen_phi(matching_from_json(in), b_h, b_w));
            } else if (b_map == "chen-phi-inv") {
                result = to_json(chen_phi_inverse(chain_from_json(in)));
            } else if (b_map == "syt-matching") {
                result = to_json(syt_to_matching(
                    syt_chain(in.get<std::vector<std::vector<int>>>())));
            } else if (b_map == "matching-syt") {
                result = to_json(matching_to_syt(matching_from_json(in)));
            } else if (b_map == "matching-vt") {
                result = to_json(
                    matching_vt(matching_from_json(in), FixedPointMode::dropped));
            } else if (b_map == "matching-vt-star") {
                result = to_json(
                    matching_vt(matching_from_json(in), FixedPointMode::kept));
            } else if (b_map == "ncnn-symmetry") {
                result = to_json(ncnn_symmetry(matching_from_json(in)));
            } else if (b_map == "matching-motzkin") {
                result = path_to_string(matching_to_motzkin(matching_from_json(in)));
            } else if (b_map == "motzkin-matching") {
                result = to_json(motzkin_to_matching(path_from_string(b_input)));
            } else if (b_map == "dershowitz") {
                result = path_to_string(dershowitz(path_from_string(b_input), b_w));
            } else if (b_map == "dershowitz-inv") {
                result =
                    path_to_string(dershowitz_inverse(path_from_string(b_input), b_w));
            } else if (b_map == "psi") {
                result = path_to_string(psi_fold(path_from_string(b_input)));
            } else if (b_map == "special-involution") {
                result =
                    path_to_string(special_involution(path_from_string(b_input), b_w));
            } else if (b_map == "csyt-triangle") {
                result = triangle_to_string(
                    csyt_to_triangle(tableau_from_json(in), b_w));
            } else if (b_map == "triangle-csyt") {
                result = to_json(triangle_to_csyt(triangle_from_string(b_input)));
            } else if (b_map == "csyt-dyck") {
                result = path_to_string(
                    csyt_to_dyck_prefix(tableau_from_json(in), b_w));
            } else if (b_map == "dyck-csyt") {
                result = to_json(dyck_prefix_to_csyt(path_from_string(b_input)));
            } else {
                std::cerr << "unknown map: " << b_map << "\n";
                return kExitUsage;
            }
            std::cout << (result.is_string() ? result.get<std::string>()
                                             : result.dump())
                      << "\n";
            return kExitOk;
        }

        if (*oracle) {
            std::vector<CountRow> rows;
            std::mutex mu;
            std::atomic<bool> all_equal{true};
            auto add_row = [&](const std::string& key, const Int& a,
                               const Int& b) {
                std::lock_guard<std::mutex> lock(mu);
                Int diff = a - b;
                rows.push_back({key, a.get_str() + "," + b.get_str() + "," +
                                         diff.get_str()});
                if (diff != 0) all_equal = false;
            };
            if (o_quantity == "csyt") {
                struct Cell { int n, h, w; };
                std::vector<Cell> cells;
                for (int n = 0; n <= o_nmax; ++n)
                    for (int h = 1; h <= o_hmax; ++h)
                        for (int w = 1; w <= o_wmax; ++w) cells.push_back({n, h, w});
                parallel_for(static_cast<int>(cells.size()), [&](int i) {
                    auto [n, h, w] = cells[i];
                    Int a = csyt_count(n, h, w, CsytMethod::chain_dp);
                    Int b = method == "factorial" && h % 2 == 1 && w % 2 == 1
                                ? csyt_count(n, h, w, CsytMethod::factorial_formula)
                                : csyt_count(n, h, w, CsytMethod::brute);
                    add_row("csyt(" + std::to_string(n) + "," +
                                std::to_string(h) + "," + std::to_string(w) + ")",
                            a, b);
                });
            } else if (o_quantity == "ncnn-bessel") {
                for (int n = 0; n <= o_nmax; ++n)
                    for (int h = 1; h <= o_hmax; ++h)
                        for (int w = 1; w <= o_wmax; ++w)
                            add_row("ncnn(" + std::to_string(n) + "," +
                                        std::to_string(h) + "," +
                                        std::to_string(w) + ")",
                                    ncnn_count(n, 2 * (h + 1), 2 * (w + 1)),
                                    ncnn_bessel_count(n, h, w));
            } else if (o_quantity == "vt") {
                for (int n = 0; n <= o_nmax; ++n)
                    for (int h = 1; h <= o_hmax; ++h)
                        for (int w = 1; w <= o_wmax; ++w) {
                            Int dp = vt_count(n, h, w, VtVariant::plain);
                            Int enumerated = 0;
                            for_each_vt(n, h, w, VtVariant::plain,
                                        [&](const VtChain&) { ++enumerated; });
                            add_row("vt(" + std::to_string(n) + "," +
                                        std::to_string(h) + "," +
                                        std::to_string(w) + ")",
                                    dp, enumerated);
                        }
            } else if (o_quantity == "quantum-kostka") {
                for (int h = 1; h <= o_hmax; ++h)
                    for (int w = 1; w <= o_wmax; ++w)
                        for (auto& lam : iter_family(h, w, o_nmax)) {
                            std::vector<int> alpha(lam.size(), 1);
                            add_row(
                                "qk(" + lam.to_string() + "," +
                                    std::to_string(h) + "," + std::to_string(w) +
                                    ")",
                                quantum_kostka(lam, h, w, alpha,
                                               KostkaMethod::tableaux),
                                quantum_kostka(lam, h, w, alpha,
                                               KostkaMethod::paths));
                        }
            } else if (o_quantity == "pfaffian-det") {
                std::mt19937 rng(static_cast<unsigned>(seed));
                std::uniform_int_distribution<int> dist(-5, 5);
                for (int trial = 0; trial < o_trials; ++trial) {
                    int size = 2 + 2 * (trial % 3);
                    std::vector<std::vector<Int>> a(size,
                                                    std::vector<Int>(size, 0));
                    for (int i = 0; i < size; ++i)
                        for (int j = i + 1; j < size; ++j) {
                            int v = dist(rng);
                            a[i][j] = v;
                            a[j][i] = -v;
                        }
                    Int pf = int_pfaffian(a);
                    add_row("trial" + std::to_string(trial), pf * pf,
                            int_determinant(a));
                }
            } else if (o_quantity == "gordon" || o_quantity == "minor-summation") {
                std::mt19937 rng(static_cast<unsigned>(seed));
                std::uniform_int_distribution<int> dist(-4, 4);
                for (int trial = 0; trial < o_trials; ++trial) {
                    bool pass;
                    if (o_quantity == "gordon") {
                        auto vals = std::make_shared<std::vector<Int>>();
                        for (int i = 0; i < 10; ++i) vals->push_back(dist(rng));
                        ZOracle z = [vals](int i) {
                            int a = std::abs(i);
                            Int v = a < static_cast<int>(vals->size())
                                        ? (*vals)[a]
                                        : Int(0);
                            if (i == 0) return EPoly::zero(1);
                            return EPoly::constant(1, i > 0 ? v : -v);
                        };
                        pass = verify_gordon(z, 1 + trial % 3,
                                             static_cast<GordonVariant>(trial % 4));
                    } else {
                        auto rand_matrix = [&](int r, int c) {
                            EMatrix m(r, c, 1);
                            for (int i = 0; i < r; ++i)
                                for (int j = 0; j < c; ++j)
                                    m.at(i, j) = EPoly::constant(1, dist(rng));
                            return m;
                        };
                        auto rand_skew = [&](int size) {
                            EMatrix a(size, size, 1);
                            for (int i = 0; i < size; ++i)
                                for (int j = i + 1; j < size; ++j) {
                                    int v = dist(rng);
                                    a.at(i, j) = EPoly::constant(1, v);
                                    a.at(j, i) = EPoly::constant(1, -v);
                                }
                            return a;
                        };
                        if (trial % 2 == 0)
                            pass = verify_minor_summation(rand_matrix(2, 2 + trial % 4),
                                                          rand_skew(2 + trial % 4),
                                                          MinorParity::even);
                        else
                            pass = verify_minor_summation(rand_matrix(3, 3 + trial % 3),
                                                          rand_skew(4 + trial % 3),
                                                          MinorParity::odd);
                    }
                    add_row("trial" + std::to_string(trial), Int(pass ? 1 : 0),
                            Int(1));
                }
            } else {
                std::cerr << "unknown quantity: " << o_quantity << "\n";
                return kExitUsage;
            }
            std::sort(rows.begin(), rows.end(),
                      [](const CountRow& a, const CountRow& b) {
                          return a.key < b.key;
                      });
            std::vector<CountRow> printable;
            printable.push_back({"columns", "lhs,rhs,diff"});
            for (auto& r : rows) printable.push_back(r);
            print_rows(printable, out);
            return all_equal ? kExitOk : kExitFinding;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
