// mckay: canonical McKay bijections at p = 3 for symmetric, general linear
// and general unitary groups, with brute-force verification suites.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mckay/errors.hpp"
#include "mckay/verify.hpp"

using json = nlohmann::json;
using namespace mckay;

namespace {

struct RunConfig {
    std::string format = "json";
    std::string out;
    long cap = default_oracle_cap();
    int jobs = 2;
    unsigned seed = 20240811;
};

std::ostream& open_sink(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw std::runtime_error("cannot open output file " + cfg.out);
    return file;
}

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(parts);
}

json sym_block_json(const SymBlock& b) {
    json j;
    j["exp"] = b.exp;
    switch (b.kind) {
        case SymBlock::Kind::hook:
            j["kind"] = "hook";
            j["hook"] = partition_json(b.h1);
            break;
        case SymBlock::Kind::C:
            j["kind"] = "C";
            j["hook"] = partition_json(b.h1);
            j["mu"] = partition_json(b.mu);
            break;
        case SymBlock::Kind::D:
            j["kind"] = "D";
            j["pair"] = json::array({partition_json(b.h1), partition_json(b.h2)});
            break;
    }
    return j;
}

json sym_row_json(const Partition& lam) {
    SymNormalizerLabel label = phi(lam);
    json row;
    row["lambda"] = partition_json(lam);
    row["blocks"] = json::array();
    for (const auto& b : label.blocks) row["blocks"].push_back(sym_block_json(b));
    return row;
}

json glgu_label_json(const GLGULabel& label) {
    json j;
    j["epsilon"] = std::string(1, label.epsilon);
    j["q"] = label.q;
    j["n"] = label.n();
    j["pairs"] = json::array();
    for (const auto& p : label.pairs) {
        json pj;
        pj["d"] = p.s.d;
        pj["rep"] = p.s.rep;
        pj["lambda"] = partition_json(p.lambda);
        j["pairs"].push_back(pj);
    }
    return j;
}

json kchar_json(const KChar& k) {
    json j;
    j["g"] = k.g;
    switch (k.kind) {
        case KChar::Kind::linear: j["kind"] = "linear"; break;
        case KChar::Kind::omega1:
            j["kind"] = "omega1";
            j["nu"] = (k.nu == 0) ? json::array({2}) : json::array({1, 1});
            break;
        case KChar::Kind::omega2: j["kind"] = "omega2"; break;
    }
    return j;
}

json image_json(const NormalizerImage& img) {
    json j;
    if (img.linear) j["linear"] = *img.linear;
    j["blocks"] = json::array();
    for (const auto& b : img.local.blocks) {
        json bj;
        bj["exp"] = b.exp;
        switch (b.kind) {
            case LocalBlock::Kind::a1:
                bj["kind"] = "a1";
                bj["tau"] = kchar_json(b.tau1);
                bj["hook"] = partition_json(b.p1);
                break;
            case LocalBlock::Kind::d1:
                bj["kind"] = "d1";
                bj["taus"] = json::array({kchar_json(b.tau1), kchar_json(b.tau2)});
                bj["hooks"] = json::array({partition_json(b.p1), partition_json(b.p2)});
                break;
            case LocalBlock::Kind::d2:
                bj["kind"] = "d2";
                bj["tau"] = kchar_json(b.tau1);
                bj["nu"] = partition_json(b.p1);
                break;
        }
        j["blocks"].push_back(bj);
    }
    return j;
}

void print_report_csv(std::ostream& os, const SuiteReport& rep) {
    os << "# mckay-csv v1 verify " << rep.suite << "\n";
    os << "case,expected,computed,pass\n";
    for (const auto& c : rep.cases)
        os << '"' << c.key << "\",\"" << c.expected << "\",\"" << c.computed << "\","
           << (c.pass ? "1" : "0") << "\n";
}

int emit_reports(const RunConfig& cfg, const std::vector<SuiteReport>& reports) {
    std::ofstream file;
    std::ostream& os = open_sink(cfg, file);
    int failures = 0;
    for (const auto& rep : reports) {
        print_report_csv(os, rep);
        failures += rep.fail_count();
        std::cerr << rep.suite << ": " << (rep.cases.size() - rep.fail_count()) << "/"
                  << rep.cases.size() << " cases pass\n";
    }
    return failures == 0 ? 0 : 1;
}

int cmd_sym(int n, const std::string& lambda_text, const RunConfig& cfg) {
    std::ofstream file;
    std::ostream& os = open_sink(cfg, file);
    if (!lambda_text.empty()) {
        Partition lam = partition_from_json(lambda_text);
        if (lam.size() != n) {
            std::cerr << "lambda is not a partition of " << n << "\n";
            return 2;
        }
        if (!is_pprime_degree(lam, 3)) {
            std::cerr << "lambda does not have 3'-degree\n";
            return 2;
        }
        os << sym_row_json(lam).dump(2) << "\n";
        return 0;
    }
    json out;
    out["n"] = n;
    auto lams = enumerate_3prime_sn(n);
    out["count"] = lams.size();
    out["rows"] = json::array();
    for (const auto& lam : lams) out["rows"].push_back(sym_row_json(lam));
    os << out.dump(2) << "\n";
    return 0;
}

int cmd_chartable(int n, const RunConfig& cfg) {
    std::ofstream file;
    std::ostream& os = open_sink(cfg, file);
    const auto& parts = partitions_of(n);
    os << "# mckay-csv v1 chartable n=" << n << "\n";
    os << "lambda";
    for (const auto& t : parts) os << ",\"" << t.str() << '"';
    os << "\n";
    auto table = sn_character_table(n);
    for (size_t i = 0; i < parts.size(); ++i) {
        os << '"' << parts[i].str() << '"';
        for (long v : table[i]) os << ',' << v;
        os << "\n";
    }
    return 0;
}

int cmd_glgu(char eps, int q, int n, bool verify, bool orbits, const RunConfig& cfg) {
    std::ofstream file;
    std::ostream& os = open_sink(cfg, file);
    auto labels = enumerate_3prime_labels(eps, q, n);
    int exit_code = 0;
    if (cfg.format == "csv") {
        os << "# mckay-csv v1 glgu epsilon=" << eps << " q=" << q << " n=" << n << "\n";
        os << "index,label,image\n";
        for (size_t i = 0; i < labels.size(); ++i)
            os << i << ",\"" << labels[i].str() << "\",\"" << full_bijection(labels[i]).str()
               << "\"\n";
    } else {
        json out;
        out["epsilon"] = std::string(1, eps);
        out["q"] = q;
        out["n"] = n;
        out["count"] = labels.size();
        out["labels"] = json::array();
        for (const auto& label : labels) {
            json row;
            row["label"] = glgu_label_json(label);
            row["image"] = image_json(full_bijection(label));
            out["labels"].push_back(row);
        }
        if (orbits) {
            GaloisOrbitReport r = fields_orbits(eps, q, n);
            json oj;
            oj["orbits_match"] = r.orbits_match;
            oj["stabilizers_match"] = r.stabilizers_match;
            oj["label_orbits"] = r.label_orbits;
            oj["label_stabilizers"] = r.label_stabilizers;
            out["orbit_report"] = oj;
            if (!r.orbits_match || !r.stabilizers_match) exit_code = 1;
        }
        if (verify) {
            SuiteReport eq = verify_glgu_equivariance(eps, q, n);
            SuiteReport orb = verify_glgu_orbits(eps, q, n);
            out["verify"] = {{"equivariance_pass", eq.passed()}, {"orbits_pass", orb.passed()},
                             {"cases", eq.cases.size() + orb.cases.size()}};
            if (!eq.passed() || !orb.passed()) exit_code = 1;
        }
        os << out.dump(2) << "\n";
        return exit_code;
    }
    if (orbits || verify) {
        std::vector<SuiteReport> reports;
        if (verify) reports.push_back(verify_glgu_equivariance(eps, q, n));
        reports.push_back(verify_glgu_orbits(eps, q, n));
        for (const auto& rep : reports) {
            print_report_csv(os, rep);
            if (!rep.passed()) exit_code = 1;
        }
    }
    return exit_code;
}

int cmd_oracle(const std::string& kind, const std::string& table_out, bool mckay_check,
               const RunConfig& cfg) {
    PermGroup g = build_group(kind, cfg.cap);
    CharacterTable t = character_table(g);
    json out;
    out["group"] = kind;
    out["order"] = t.group_order;
    out["exponent"] = t.exponent;
    out["classes"] = t.class_count();
    out["degrees"] = t.degrees;
    out["count_3prime"] = count_3prime(t);
    int exit_code = 0;
    if (mckay_check) {
        auto [p, nrm] = sylow3_and_normalizer(g, cfg.cap);
        CharacterTable tn = character_table(nrm);
        out["sylow3_order"] = p.order();
        out["normalizer_order"] = nrm.order();
        out["normalizer_count_3prime"] = count_3prime(tn);
        out["mckay_counts_equal"] = (count_3prime(t) == count_3prime(tn));
        if (count_3prime(t) != count_3prime(tn)) exit_code = 1;
    }
    if (!table_out.empty()) {
        std::ofstream tf(table_out);
        if (!tf) throw std::runtime_error("cannot open " + table_out);
        tf << "# mckay-csv v1 oracle-table group=" << kind << "\n";
        tf << "degree";
        for (int c = 0; c < t.class_count(); ++c)
            tf << ",\"size=" << t.class_sizes[static_cast<size_t>(c)] << " order="
               << t.class_orders[static_cast<size_t>(c)] << '"';
        tf << "\n";
        for (size_t r = 0; r < t.rows.size(); ++r) {
            tf << t.degrees[r];
            for (const auto& v : t.rows[r]) tf << ",\"" << v.str() << '"';
            tf << "\n";
        }
    }
    std::ofstream file;
    std::ostream& os = open_sink(cfg, file);
    os << out.dump(2) << "\n";
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical McKay bijections at p = 3 with exact verification"};
    app.require_subcommand(1);
    app.fallthrough(); // --cap/--jobs/--seed may follow the subcommand
    RunConfig cfg;
    app.add_option("--cap", cfg.cap, "group order cap for the oracle");
    app.add_option("--jobs", cfg.jobs, "work pool size for verification suites");
    app.add_option("--seed", cfg.seed, "seed for randomized property suites");

    // sym
    auto* sym = app.add_subcommand("sym", "McKay bijection table for S_n");
    int sym_n = 1;
    std::string sym_lambda;
    sym->add_option("--n", sym_n, "degree of the symmetric group")->required();
    sym->add_option("--lambda", sym_lambda, "single partition as a JSON array, e.g. [4,3,1]");
    sym->add_option("--out", cfg.out, "output file (default stdout)");

    // chartable
    auto* chartable = app.add_subcommand("chartable", "character table of S_n as CSV");
    int ct_n = 1;
    chartable->add_option("--n", ct_n, "degree of the symmetric group")->required();
    chartable->add_option("--out", cfg.out, "output file (default stdout)");

    // glgu
    auto* glgu = app.add_subcommand("glgu", "3'-labels and bijection for GL_n(q)/GU_n(q)");
    std::string glgu_eps = "+";
    int glgu_q = 2, glgu_n = 1;
    bool glgu_verify = false, glgu_orbits = false;
    glgu->add_option("--epsilon", glgu_eps, "+ for GL, - for GU")->required();
    glgu->add_option("--q", glgu_q, "prime power with 3 not dividing q")->required();
    glgu->add_option("--n", glgu_n, "rank")->required();
    glgu->add_flag("--verify", glgu_verify, "verify bijectivity and equivariance");
    glgu->add_flag("--orbits", glgu_orbits, "emit the Galois orbit/stabilizer report");
    glgu->add_option("--format", cfg.format, "json or csv");
    glgu->add_option("--out", cfg.out, "output file (default stdout)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force character-theory oracle");
    std::string oracle_group, oracle_table;
    bool oracle_mckay = false;
    oracle->add_option("--group", oracle_group, "sym:N | symnorm:N | gl:N:Q | gu:N:Q")->required();
    oracle->add_option("--table", oracle_table, "write the character table as CSV");
    oracle->add_flag("--mckay-check", oracle_mckay, "compare 3'-counts with the Sylow normalizer");
    oracle->add_option("--out", cfg.out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "verification suites");
    std::string suite;
    bool all = false;
    int v_p = 3, v_k = 1, v_q = 4, v_n = 2;
    std::string v_eps = "+", v_group = "gu:2:2";
    verify->add_option("suite", suite,
                       "lem1|thmB|psi|hooks23k|c3precise|glgu-equivariance|glgu-orbits|"
                       "mckay-counts|oracle-crosscheck|symA|sym-constituents|negative-control|"
                       "properties");
    verify->add_flag("--all", all, "run the full acceptance battery");
    verify->add_option("--p", v_p, "prime (lem1, thmB)");
    verify->add_option("--k", v_k, "exponent (lem1, thmB, psi, hooks23k, c3precise)");
    verify->add_option("--epsilon", v_eps, "+|- (glgu suites)");
    verify->add_option("--q", v_q, "prime power (glgu suites)");
    verify->add_option("--n", v_n, "bound (glgu suites, symA)");
    verify->add_option("--group", v_group, "group kind (oracle-crosscheck)");
    verify->add_option("--out", cfg.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (sym->parsed()) return cmd_sym(sym_n, sym_lambda, cfg);
        if (chartable->parsed()) return cmd_chartable(ct_n, cfg);
        if (glgu->parsed()) {
            if (glgu_eps != "+" && glgu_eps != "-") {
                std::cerr << "epsilon must be + or -\n";
                return 2;
            }
            return cmd_glgu(glgu_eps[0], glgu_q, glgu_n, glgu_verify, glgu_orbits, cfg);
        }
        if (oracle->parsed()) return cmd_oracle(oracle_group, oracle_table, oracle_mckay, cfg);
        if (verify->parsed()) {
            if (!all && suite.empty()) {
                std::cerr << "choose a suite or pass --all\n";
                return 2;
            }
            std::vector<SuiteReport> reports;
            if (all) {
                reports.push_back(verify_psi(1));
                for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
                    reports.push_back(verify_lem1(p, k));
                    reports.push_back(verify_thmB(p, k));
                }
                reports.push_back(verify_c3precise(1));
                reports.push_back(verify_c3precise(2));
                reports.push_back(verify_hooks23k(1));
                reports.push_back(verify_hooks23k(2));
                reports.push_back(verify_sym_bijection(100, cfg.jobs));
                reports.push_back(verify_sym_constituents());
                reports.push_back(verify_mckay_counts({"sym:3", "sym:4", "sym:5", "sym:6", "sym:7",
                                                       "gl:2:2", "gl:2:4", "gl:2:5", "gl:3:2",
                                                       "gu:2:2", "gu:2:4"},
                                                      cfg.cap));
                for (char eps : {'+', '-'})
                    for (int q : {2, 4, 5, 7, 8}) {
                        reports.push_back(verify_glgu_equivariance(eps, q, 4));
                        reports.push_back(verify_glgu_orbits(eps, q, 4));
                    }
                reports.push_back(verify_oracle_fields_crosscheck(cfg.cap));
                reports.push_back(verify_negative_control(cfg.cap));
                reports.push_back(verify_properties(cfg.seed));
            } else if (suite == "lem1") {
                reports.push_back(verify_lem1(v_p, v_k));
            } else if (suite == "thmB") {
                reports.push_back(verify_thmB(v_p, v_k));
            } else if (suite == "psi") {
                reports.push_back(verify_psi(v_k));
            } else if (suite == "hooks23k") {
                reports.push_back(verify_hooks23k(v_k));
            } else if (suite == "c3precise") {
                reports.push_back(verify_c3precise(v_k));
            } else if (suite == "glgu-equivariance") {
                reports.push_back(verify_glgu_equivariance(v_eps[0], v_q, v_n));
            } else if (suite == "glgu-orbits") {
                reports.push_back(verify_glgu_orbits(v_eps[0], v_q, v_n));
            } else if (suite == "mckay-counts") {
                reports.push_back(verify_mckay_counts({"sym:3", "sym:4", "sym:5", "sym:6", "sym:7",
                                                       "gl:2:2", "gl:2:4", "gl:2:5", "gl:3:2",
                                                       "gu:2:2", "gu:2:4"},
                                                      cfg.cap));
            } else if (suite == "oracle-crosscheck") {
                reports.push_back(verify_oracle_crosscheck(v_group, cfg.cap));
            } else if (suite == "symA") {
                reports.push_back(verify_sym_bijection(v_n, cfg.jobs));
            } else if (suite == "sym-constituents") {
                reports.push_back(verify_sym_constituents());
            } else if (suite == "negative-control") {
                reports.push_back(verify_negative_control(cfg.cap));
            } else if (suite == "properties") {
                reports.push_back(verify_properties(cfg.seed));
            } else {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            return emit_reports(cfg, reports);
        }
    } catch (const defining_characteristic& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_three_prime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_parameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
