// snkron: exact symmetric-group character values, virtual-character
// verifiers, and Kronecker coefficient scans from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "snkron/character.hpp"
#include "snkron/io.hpp"
#include "snkron/kronecker.hpp"
#include "snkron/neighborhood.hpp"
#include "snkron/partition.hpp"

using namespace snkron;

namespace {

struct RunConfig {
    int n_cap = 20;
    int table_cap = 16;
    int threads = 1;
    std::string format = "csv";  // csv | json
    std::string out_path;        // empty = stdout
    std::string cache_path;      // empty = no persistence
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::trunc);
    if (!out) throw error("cannot write output file: " + cfg.out_path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int finish_report(const RunConfig& cfg, const VerifierReport& report) {
    emit(cfg, dump(report_to_json(report)));
    return report.ok() ? 0 : 1;
}

VerifierReport verify_orthogonality(int n, CharacterCache& cache) {
    VerifierReport report;
    report.name = "orthogonality";
    report.n = n;
    CharacterTable t = character_table(n, cache, TableOptions{std::max(n, 16), 1});
    std::size_t d = t.order.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Int sum = 0;
            for (std::size_t l = 0; l < d; ++l)
                sum = checked_add(sum,
                                  checked_mul(t.values[i][l], t.values[j][l]));
            Int want = (i == j) ? centralizer_order(t.order[i]) : 0;
            ++report.checked;
            if (sum != want)
                report.violations.push_back(
                    "(K K^T)[" + t.order[i].to_string() + "][" +
                    t.order[j].to_string() + "] = " + std::to_string(sum) +
                    ", expected " + std::to_string(want));
        }
    return report;
}

VerifierReport verify_rosas(int max_weight, CharacterCache& cache) {
    VerifierReport report;
    report.name = "rosas";
    report.n = max_weight;
    auto check = [&](const HookShape& a, const HookShape& b,
                     const Partition& lam) {
        Int closed = rosas_hook(a, b, lam);
        Int exact = kronecker_coefficient(a.to_partition(), b.to_partition(),
                                          lam, cache);
        ++report.checked;
        if (closed != exact)
            report.violations.push_back(
                "g(" + a.to_partition().to_string() + " ; " +
                b.to_partition().to_string() + " ; " + lam.to_string() +
                ") table " + std::to_string(closed) + " != " +
                std::to_string(exact));
    };
    for (int k = 0; 2 * k + 2 <= max_weight; ++k) {
        HookShape tau{k + 2, k};
        for (const Partition& lam : partitions_of(2 * k + 2)) {
            check(tau, tau, lam);
            check(tau, tau.conj(), lam);
        }
    }
    for (int k = 1; 2 * k + 1 <= max_weight; ++k) {
        HookShape alpha{k + 1, k};
        HookShape alphatilde{k + 2, k - 1};
        for (const Partition& lam : partitions_of(2 * k + 1)) {
            check(alpha, alpha, lam);
            check(alphatilde, alpha, lam);
        }
    }
    return report;
}

VerifierReport verify_gamma(int k, CharacterCache& cache) {
    VerifierReport report;
    report.name = "gamma";
    report.n = k;
    Partition gamma = gamma_partition(k);
    for (const Partition& lam : partitions_of(2 * k + 2)) {
        Int closed = gamma_square_formula(k, lam);
        Int exact = kronecker_coefficient(gamma, gamma, lam, cache);
        ++report.checked;
        if (closed != exact)
            report.violations.push_back("formula(" + lam.to_string() + ") = " +
                                        std::to_string(closed) + " != " +
                                        std::to_string(exact));
        if (k >= 2) {  // the shape rule misses two hooks at k = 1
            bool predicted = gamma_square_support_classifier(k, lam) ==
                             SupportPrediction::positive;
            ++report.checked;
            if (predicted != (exact > 0))
                report.violations.push_back("classifier(" + lam.to_string() +
                                            ") disagrees with g = " +
                                            std::to_string(exact));
        }
    }
    return report;
}

VerifierReport verify_littlewood(int max_weight, CharacterCache& cache) {
    VerifierReport report;
    report.name = "littlewood";
    report.n = max_weight;
    for (int n = 2; n <= max_weight; ++n)
        for (const Partition& gamma : partitions_of(n))
            for (const Partition& alpha : partitions_of(n - 1)) {
                ++report.checked;
                if (!littlewood_identity_check(alpha, gamma, cache))
                    report.violations.push_back("(" + alpha.to_string() +
                                                " ; " + gamma.to_string() + ")");
            }
    return report;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos) {
        int k = std::stoi(text);
        return {k, k};
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact S_n characters, hook neighborhoods and Kronecker scans"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out_path, "write output to this file");
    app.add_option("--threads", cfg.threads, "worker threads for scans");
    app.add_option("--n-cap", cfg.n_cap, "largest admissible weight");
    app.add_option("--cache", cfg.cache_path,
                   "character cache file (loaded if present, saved on exit)");

    std::string lambda_text, mu_text, name, bound_text, range_text;
    int arg_n = 0, arg_k = 0, arg_i = 0, arg_j = 0;

    CLI::App* cmd_char = app.add_subcommand("char", "chi^lambda(mu)");
    cmd_char->add_option("lambda", lambda_text)->required();
    cmd_char->add_option("mu", mu_text)->required();

    CLI::App* cmd_table = app.add_subcommand("table", "character table of S_n");
    cmd_table->add_option("n", arg_n)->required();

    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "run an exhaustive identity verifier; exit 0 iff clean");
    cmd_verify->add_option("name", name)
        ->required()
        ->check(CLI::IsMember({"regev", "orthogonality", "morotti", "rosas",
                               "gamma", "littlewood"}));
    cmd_verify->add_option("bound", bound_text)->required();

    CLI::App* cmd_saxl =
        app.add_subcommand("saxl", "tensor-square support of the staircase");
    cmd_saxl->add_option("k", arg_k)->required();

    CLI::App* cmd_gsq = app.add_subcommand(
        "gamma-square", "closed-form tensor square of (k+1,2,1^(k-1))");
    cmd_gsq->add_option("k", arg_k)->required();

    CLI::App* cmd_eff = app.add_subcommand(
        "effectiveness", "|A| and |B| counts over a range k_lo..k_hi");
    cmd_eff->add_option("range", range_text)->required();

    CLI::App* cmd_nb =
        app.add_subcommand("neighborhood", "going-around members of N(mu,|h|)");
    cmd_nb->add_option("mu", mu_text)->required();
    cmd_nb->add_option("i", arg_i)->required();
    cmd_nb->add_option("j", arg_j)->required();

    CLI::App* cmd_scan = app.add_subcommand(
        "unique-scan",
        "count nonzero neighbors chi^tau(lambda-hat) over P(n); reports only");
    cmd_scan->add_option("n", arg_n)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        CharacterCache cache(cfg.n_cap);
        if (!cfg.cache_path.empty()) cache.load(cfg.cache_path);
        int status = 0;

        if (app.got_subcommand(cmd_char)) {
            Partition lambda = Partition::parse(lambda_text);
            Partition mu = Partition::parse(mu_text);
            std::cout << character_value(lambda, mu, cache) << "\n";
        } else if (app.got_subcommand(cmd_table)) {
            CharacterTable t = character_table(
                arg_n, cache, TableOptions{cfg.table_cap, cfg.threads});
            if (cfg.format == "json") {
                emit(cfg, dump(table_to_json(t)));
            } else {
                std::ostringstream os;
                write_table_csv(t, os);
                emit(cfg, os.str());
            }
        } else if (app.got_subcommand(cmd_verify)) {
            int bound = std::stoi(bound_text);
            VerifierReport report;
            if (name == "regev")
                report = verify_regev_identity(bound, cache);
            else if (name == "orthogonality")
                report = verify_orthogonality(bound, cache);
            else if (name == "morotti")
                report = morotti_sign_check(bound);
            else if (name == "rosas")
                report = verify_rosas(bound, cache);
            else if (name == "gamma")
                report = verify_gamma(bound, cache);
            else
                report = verify_littlewood(bound, cache);
            status = finish_report(cfg, report);
        } else if (app.got_subcommand(cmd_saxl)) {
            SaxlReport report = saxl_check(arg_k, cache, cfg.threads);
            if (cfg.format == "json") {
                emit(cfg, dump(saxl_to_json(report)));
            } else {
                Partition rho = staircase(arg_k);
                auto support = tensor_square_support(rho, cache, cfg.threads);
                std::ostringstream os;
                std::vector<Partition> order;
                for (const Partition& p : partitions_of(report.n))
                    order.push_back(p);
                write_support_csv(order, support,
                                  principal_hook_partition(rho), cache, os);
                emit(cfg, os.str());
            }
            status = report.ok() ? 0 : 1;
        } else if (app.got_subcommand(cmd_gsq)) {
            Partition gamma = gamma_partition(arg_k);
            if (2 * arg_k + 2 > cfg.n_cap)
                throw cap_exceeded_error("n-cap (" + std::to_string(cfg.n_cap) +
                                         ") exceeded at n = " +
                                         std::to_string(2 * arg_k + 2));
            std::ostringstream os;
            json rows = json::array();
            if (cfg.format == "csv") os << "partition,coefficient,predicted\n";
            for (const Partition& lam : partitions_of(2 * arg_k + 2)) {
                Int g = gamma_square_formula(arg_k, lam);
                bool pos = gamma_square_support_classifier(arg_k, lam) ==
                           SupportPrediction::positive;
                if (cfg.format == "csv")
                    os << csv_quote(lam.to_string()) << ',' << g << ','
                       << (pos ? "positive" : "zero") << '\n';
                else
                    rows.push_back(json{{"partition", lam.to_string()},
                                        {"coefficient", g},
                                        {"predicted", pos ? "positive" : "zero"}});
            }
            if (cfg.format == "json")
                emit(cfg, dump(json{{"schema_version", kSchemaVersion},
                                    {"k", arg_k},
                                    {"gamma", gamma.to_string()},
                                    {"rows", rows}}));
            else
                emit(cfg, os.str());
        } else if (app.got_subcommand(cmd_eff)) {
            auto [klo, khi] = parse_range(range_text);
            std::ostringstream os;
            json rows = json::array();
            if (cfg.format == "csv")
                os << "k,n1,sizeA1,sizeB1,ratio1,n2,sizeA2,sizeB2,ratio2\n";
            for (int k = klo; k <= khi; ++k) {
                auto [a1, b1] = effectiveness_counts(k, 1, cache, cfg.threads);
                auto [a2, b2] = effectiveness_counts(k, 2, cache, cfg.threads);
                if (cfg.format == "csv")
                    os << k << ',' << (2 * k + 1) << ',' << a1 << ',' << b1
                       << ',' << b1 << '/' << a1 << ',' << (2 * k + 2) << ','
                       << a2 << ',' << b2 << ',' << b2 << '/' << a2 << '\n';
                else
                    rows.push_back(json{{"k", k},
                                        {"n1", 2 * k + 1},
                                        {"sizeA1", a1},
                                        {"sizeB1", b1},
                                        {"n2", 2 * k + 2},
                                        {"sizeA2", a2},
                                        {"sizeB2", b2}});
            }
            if (cfg.format == "json")
                emit(cfg, dump(json{{"schema_version", kSchemaVersion},
                                    {"rows", rows}}));
            else
                emit(cfg, os.str());
        } else if (app.got_subcommand(cmd_nb)) {
            Partition mu = Partition::parse(mu_text);
            Neighborhood nb = neighborhood(mu, hook_at(mu, arg_i, arg_j));
            if (cfg.format == "json") {
                emit(cfg, dump(neighborhood_to_json(nb)));
            } else {
                std::ostringstream os;
                write_neighborhood_csv(nb, os);
                emit(cfg, os.str());
            }
        } else if (app.got_subcommand(cmd_scan)) {
            auto cases = unique_neighbor_scan(arg_n, cache);
            std::int64_t not_unique = 0;
            for (const auto& c : cases)
                if (c.nonzero_count != 1) ++not_unique;
            if (cfg.format == "json") {
                json rows = json::array();
                for (const auto& c : cases)
                    rows.push_back(json{{"lambda", c.lambda.to_string()},
                                        {"row", c.hook.row},
                                        {"col", c.hook.col},
                                        {"length", c.hook.length},
                                        {"nonzero_count", c.nonzero_count},
                                        {"center_nonzero", c.center_nonzero}});
                emit(cfg, dump(json{{"schema_version", kSchemaVersion},
                                    {"n", arg_n},
                                    {"cases", static_cast<int>(cases.size())},
                                    {"not_unique", not_unique},
                                    {"rows", rows}}));
            } else {
                std::ostringstream os;
                os << "lambda,row,col,length,nonzero_count,center_nonzero\n";
                for (const auto& c : cases)
                    os << csv_quote(c.lambda.to_string()) << ',' << c.hook.row
                       << ',' << c.hook.col << ',' << c.hook.length << ','
                       << c.nonzero_count << ',' << (c.center_nonzero ? 1 : 0)
                       << '\n';
                emit(cfg, os.str());
            }
        }

        if (!cfg.cache_path.empty()) cache.save(cfg.cache_path);
        return status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
