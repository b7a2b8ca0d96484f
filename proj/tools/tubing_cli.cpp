// Command-line front end: lattice/chain enumeration, the tableau
// bijections, quasisymmetric chain functions, and verification suites.
// Exit codes: 0 ok, 1 verification failure, 2 usage/input error,
// 3 capacity guard.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tubing/json_io.hpp"
#include "tubing/qsym.hpp"
#include "tubing/shortest.hpp"
#include "tubing/shuffle.hpp"
#include "tubing/tableau.hpp"
#include "tubing/tubing.hpp"

using nlohmann::json;
using namespace tubing;

namespace {

Perm parse_perm_arg(const std::string& s) {
    Perm w(parse_letters(s));
    if (!w.is_valid()) throw ArgumentError("not a permutation: " + s);
    return w;
}

ReducedWord parse_word_arg(const std::string& s) {
    auto letters = parse_letters(s);
    int n = 1;
    for (int l : letters) n = std::max(n, l + 1);
    return ReducedWord(n, letters);
}

int run_verify(const std::string& suite, int max_size, std::ostream& out) {
    if (max_size < 2) throw ArgumentError("--max-size must be at least 2");
    if (max_size * (max_size - 1) / 2 > max_enumeration_cells())
        throw CapacityError("--max-size exceeds the cell guard");
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    };

    if (suite == "3equiv" || suite == "all") {
        for (int N = 2; N <= max_size; ++N)
            for (int m = 1; m <= N; ++m) {
                int n = N - m;
                auto words = shuf(m, n);
                std::set<ReducedWord> by_shuf(words.begin(), words.end());
                std::set<ReducedWord> by_tab;
                for (const auto& rho : all_reduced_words(longest_permutation(N)))
                    if (n == 0 || is_n_row_shiftable(eg_q(rho), n))
                        by_tab.insert(rho);
                auto lat = build_lattice(lollipop(m, n));
                auto lc = longest_chain_words(lat);
                std::set<ReducedWord> by_chain(lc.begin(), lc.end());
                bool ok = by_shuf == by_tab && by_tab == by_chain;
                report("3equiv L(" + std::to_string(m) + "," + std::to_string(n) +
                           ") |Shuf|=" + std::to_string(by_shuf.size()),
                       ok);
            }
    }
    if (suite == "quasi-schur" || suite == "all") {
        for (int N = 2; N <= max_size; ++N)
            for (int m = 1; m <= N; ++m) {
                int n = N - m;
                QSymExpr lhs = lmf(lollipop(m, n));
                QSymExpr rhs;
                for (const auto& a : comp_mn(m, n)) rhs += young_quasi_schur(a);
                report("quasi-schur L(" + std::to_string(m) + "," +
                           std::to_string(n) + ")",
                       (lhs - rhs).is_zero());
            }
    }
    if (suite == "smc" || suite == "all") {
        for (int N = 2; N <= std::min(max_size, 6); ++N)
            for (int m = 1; m <= N; ++m) {
                int n = N - m;
                auto smb = enumerate_smb(m, n);
                auto words = all_reduced_words(w_mn(m, n));
                auto lat = build_lattice(lollipop(m, n));
                auto sc = shortest_chains(lat);
                bool ok = smb.size() == words.size() && words.size() == sc.size();
                std::set<ReducedWord> image;
                for (const auto& b : smb) image.insert(varsigma(b, m, n));
                ok = ok && image.size() == smb.size();
                for (const auto& sigma : words) {
                    ok = ok && image.count(sigma) > 0 &&
                         descent_set(sigma) == cycle_descents(psi(sigma, m, n));
                }
                report("smc L(" + std::to_string(m) + "," + std::to_string(n) +
                           ") |SMB|=" + std::to_string(smb.size()),
                       ok);
            }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tubing lattice and chain-function toolkit"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap on internal parallelism");

    std::string graph_spec, format = "json", filter = "all", word, inverse_file;
    bool count = false, overlay = false;

    auto* lattice_cmd = app.add_subcommand("lattice", "build and emit L(G)");
    lattice_cmd->add_option("graph", graph_spec, "K<N>|P<N>|L<m>,<n>|@file.json")
        ->required();
    lattice_cmd->add_option("--format", format, "json|dot");
    lattice_cmd->add_flag("--overlay", overlay,
                          "emit the weak order with class clusters (N <= 4)");

    auto* chains_cmd = app.add_subcommand("chains", "enumerate maximal chains");
    chains_cmd->add_option("graph", graph_spec)->required();
    chains_cmd->add_option("--filter", filter, "all|longest|shortest");
    chains_cmd->add_flag("--count", count);

    auto* eg_cmd = app.add_subcommand("eg", "Edelman-Greene insertion");
    eg_cmd->add_option("word", word, "reduced word, e.g. 213213");
    eg_cmd->add_option("--inverse", inverse_file,
                       "tableau JSON file; emits the word");

    auto* walk_cmd =
        app.add_subcommand("walk", "word -> walk, balanced tableau, SYT");
    walk_cmd->add_option("word", word)->required();

    int m = 0, n = -1;
    bool tagged = false;
    auto* shuffles_cmd = app.add_subcommand("shuffles", "emit Shuf(m,n)");
    shuffles_cmd->add_option("m", m)->required();
    shuffles_cmd->add_option("n", n)->required();
    shuffles_cmd->add_flag("--tagged", tagged,
                           "emit tagged shuffles grouped by (sigma, tau)");

    auto* qsym_cmd = app.add_subcommand("qsym", "quasisymmetric functions");
    std::vector<std::string> lmf_args;
    std::string fg_spec, stanley_perm, expand_basis;
    qsym_cmd->add_option("--lmf", lmf_args, "L m n: longest-chain function")
        ->expected(2, 3);
    qsym_cmd->add_option("--fg", fg_spec, "chain function F_G");
    qsym_cmd->add_option("--stanley", stanley_perm, "Stanley F_w");
    qsym_cmd->add_option("--expand", expand_basis, "qschur|schur");

    auto* smc_cmd = app.add_subcommand("smc", "shortest maximal chain objects");
    std::string smc_list = "words";
    smc_cmd->add_option("m", m)->required();
    smc_cmd->add_option("n", n)->required();
    smc_cmd->add_option("--list", smc_list, "smb|words|cycles|sizes");

    auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
    std::string suite = "all";
    int max_size = 5;
    verify_cmd->add_option("--suite", suite, "3equiv|quasi-schur|smc|all");
    verify_cmd->add_option("--max-size", max_size, "largest m+n checked");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*lattice_cmd) {
            SimpleGraph g = parse_graph_spec(graph_spec);
            if (overlay) {
                std::cout << weak_order_overlay_dot(g);
            } else if (format == "dot") {
                std::cout << lattice_to_dot(build_lattice(g));
            } else if (format == "json") {
                std::cout << lattice_to_json(build_lattice(g)).dump(2) << "\n";
            } else {
                throw ArgumentError("--format must be json or dot");
            }
        } else if (*chains_cmd) {
            SimpleGraph g = parse_graph_spec(graph_spec);
            auto lat = build_lattice(g);
            std::vector<Chain> chains;
            if (filter == "all")
                chains = maximal_chains(lat);
            else if (filter == "longest")
                chains = longest_chains(lat);
            else if (filter == "shortest")
                chains = shortest_chains(lat);
            else
                throw ArgumentError("--filter must be all, longest or shortest");
            if (count) {
                std::cout << chains.size() << "\n";
            } else {
                json out = json::array();
                for (const auto& ch : chains) {
                    json seq = json::array();
                    for (int c : ch) seq.push_back(to_json(lat.min_rep[c]));
                    out.push_back(seq);
                }
                std::cout << out.dump(2) << "\n";
            }
        } else if (*eg_cmd) {
            if (!inverse_file.empty()) {
                std::ifstream in(inverse_file);
                if (!in) throw ArgumentError("cannot open " + inverse_file);
                json j;
                in >> j;
                Tableau q = tableau_from_json(j);
                std::cout << to_json(gamma_word(q)).dump(2) << "\n";
            } else if (!word.empty()) {
                auto rw = parse_word_arg(word);
                auto [p, q] = eg_insert(rw);
                std::cout << json{{"P", to_json(p)}, {"Q", to_json(q)}}.dump(2)
                          << "\n";
            } else {
                throw ArgumentError("eg needs a word or --inverse");
            }
        } else if (*walk_cmd) {
            auto rw = parse_word_arg(word);
            auto wk = word_to_walk(rw);
            std::cout << json{{"word", to_json(rw)},
                              {"walk", walk_to_json(wk)},
                              {"balanced", to_json(walk_to_balanced(wk, rw.n))},
                              {"syt", to_json(eg_q(rw))}}
                             .dump(2)
                      << "\n";
        } else if (*shuffles_cmd) {
            json out = json::array();
            if (tagged) {
                auto taus = shiftable_words(n);
                for (auto& tau : taus) tau.n = m + n;
                for (const auto& sigma : all_reduced_words(v_word(m, n)))
                    for (const auto& tau : taus) {
                        json group{{"sigma", to_json(sigma)},
                                   {"tau", to_json(tau)},
                                   {"shuffles", json::array()}};
                        for (const auto& sh : commuting_shuffles(sigma, tau))
                            group["shuffles"].push_back(to_json(sh));
                        out.push_back(group);
                    }
            } else {
                for (const auto& rw : shuf(m, n)) out.push_back(to_json(rw));
            }
            std::cout << out.dump(2) << "\n";
        } else if (*qsym_cmd) {
            QSymExpr f;
            if (!lmf_args.empty()) {
                if (lmf_args.size() == 3 && lmf_args[0] != "L")
                    throw ArgumentError("--lmf expects: L <m> <n>");
                std::size_t base = lmf_args.size() == 3 ? 1 : 0;
                f = lmf(lollipop(std::stoi(lmf_args[base]),
                                 std::stoi(lmf_args[base + 1])));
            } else if (!fg_spec.empty()) {
                f = chain_function_fg(parse_graph_spec(fg_spec));
            } else if (!stanley_perm.empty()) {
                f = stanley_f(parse_perm_arg(stanley_perm));
            } else {
                throw ArgumentError("qsym needs --lmf, --fg or --stanley");
            }
            if (expand_basis.empty()) {
                std::cout << to_json(f).dump(2) << "\n";
            } else {
                ExpandResult res;
                if (expand_basis == "qschur")
                    res = expand_in_young_quasi_schur(f);
                else if (expand_basis == "schur")
                    res = expand_in_schur(f);
                else
                    throw ArgumentError("--expand must be qschur or schur");
                json coeffs = json::array();
                for (const auto& [c, x] : res.coefficients)
                    coeffs.push_back(json{{"index", c}, {"coeff", x}});
                std::cout << json{{"ok", res.ok},
                                  {"nonnegative", res.ok && res.nonnegative()},
                                  {"coefficients", coeffs},
                                  {"residue", to_json(res.residue)}}
                                 .dump(2)
                          << "\n";
            }
        } else if (*smc_cmd) {
            auto smb = enumerate_smb(m, n);
            if (smc_list == "sizes") {
                auto words = all_reduced_words(w_mn(m, n));
                auto lat = build_lattice(lollipop(m, n));
                std::cout << json{{"smb", smb.size()},
                                  {"words", words.size()},
                                  {"shortest_chains",
                                   shortest_chains(lat).size()}}
                                 .dump(2)
                          << "\n";
            } else {
                json out = json::array();
                for (const auto& b : smb) {
                    if (smc_list == "smb") {
                        out.push_back(to_json(b));
                    } else if (smc_list == "words") {
                        out.push_back(to_json(varsigma(b, m, n)));
                    } else if (smc_list == "cycles") {
                        out.push_back(to_json(psi(varsigma(b, m, n), m, n)));
                    } else if (smc_list == "pipeline") {
                        ReducedWord sigma = varsigma(b, m, n);
                        out.push_back(json{{"smb", to_json(b)},
                                           {"word", to_json(sigma)},
                                           {"lift", to_json(lift_smb(b, m, n))},
                                           {"cycles", to_json(psi(sigma, m, n))}});
                    } else {
                        throw ArgumentError(
                            "--list must be smb|words|cycles|pipeline|sizes");
                    }
                }
                std::cout << out.dump(2) << "\n";
            }
        } else if (*verify_cmd) {
            return run_verify(suite, max_size, std::cout);
        }
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
