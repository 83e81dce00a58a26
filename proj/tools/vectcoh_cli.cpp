#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vectcoh/cohomology.hpp"
#include "vectcoh/errors.hpp"
#include "vectcoh/oracle.hpp"
#include "vectcoh/selftest.hpp"
#include "vectcoh/table.hpp"

namespace {

using namespace vectcoh;

OutputFormat parse_format(const std::string& f) {
    if (f == "json") return OutputFormat::Json;
    if (f == "csv") return OutputFormat::Csv;
    return OutputFormat::Text;
}

void apply_fault(const std::string& fault) {
    if (fault == "binomial") debug::binomial_fault = true;
    if (fault == "reference") debug::reference_fault = true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_dim(int arity, int lambda, bool relative, OutputFormat format, bool dump_matrices) {
    CohomologyReport report = cohomology(arity, lambda, relative);
    std::cout << format_report(report, format);
    if (dump_matrices) {
        nlohmann::ordered_json j;
        j["delta_up"] = delta_matrix(arity, lambda, relative).entries.to_json();
        j["delta_down"] = delta_matrix(arity - 1, lambda, relative).entries.to_json();
        std::cout << j.dump(2) << "\n";
    }
    return report.divergent_from_reference ? 1 : 0;
}

int cmd_table(int arity, int lambda_min, int lambda_max, bool relative, OutputFormat format) {
    auto rows = compute_table(arity, lambda_min, lambda_max, relative);
    std::cout << format_table(rows, arity, format);
    return any_divergent(rows) ? 1 : 0;
}

int cmd_basis(int arity, int lambda, bool relative, OutputFormat format) {
    CochainBasis basis = enumerate_basis(arity, lambda, relative);
    CohomologyReport report = cohomology(arity, lambda, relative);
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["arity"] = arity;
        j["lambda"] = lambda;
        j["relative"] = relative;
        auto tuples = nlohmann::ordered_json::array();
        for (const auto& t : basis.tuples) tuples.push_back(t);
        j["tuples"] = std::move(tuples);
        auto reps = nlohmann::ordered_json::array();
        for (const auto& r : report.representatives) reps.push_back(r.to_json());
        j["representatives"] = std::move(reps);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "basis of C^" << arity << " at lambda = " << lambda
                  << (relative ? " (aff(1)-relative)" : " (absolute)") << ": " << basis.size()
                  << " tuples\n";
        for (const auto& t : basis.tuples) {
            std::cout << "  (";
            for (size_t i = 0; i < t.size(); ++i) std::cout << (i ? "," : "") << t[i];
            std::cout << ")\n";
        }
        std::cout << format_report(report, OutputFormat::Text);
    }
    return 0;
}

int cmd_check(const std::string& input, bool coboundary_certificate, OutputFormat format) {
    SymbolicCochain c = SymbolicCochain::parse(read_file(input));
    SymbolicCochain dc = delta_symbolic(c);
    const bool is_cocycle = dc.is_zero();

    nlohmann::ordered_json j;
    j["is_cocycle"] = is_cocycle;
    if (!is_cocycle) j["delta"] = dc.to_json();
    if (is_cocycle && coboundary_certificate) {
        if (c.arity() == 0) {
            j["is_coboundary"] = c.is_zero();
        } else {
            DeltaMatrix down = delta_matrix(c.arity() - 1, c.lambda(), c.relative());
            Membership m = image_membership(down.entries, down.codomain.coordinates(c));
            j["is_coboundary"] = m.member;
            if (m.member) {
                SymbolicCochain preimage = down.domain.from_coordinates(m.solution);
                if (!(delta_symbolic(preimage) == c))
                    throw std::logic_error("check: coboundary certificate failed verification");
                j["preimage"] = preimage.to_json();
            } else {
                auto witness = nlohmann::ordered_json::array();
                for (const auto& w : m.witness) witness.push_back(w.str());
                j["witness"] = std::move(witness);
            }
        }
    }

    if (format == OutputFormat::Json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "cocycle: " << (is_cocycle ? "yes" : "no") << "\n";
        if (!is_cocycle) std::cout << "delta: " << dc.serialize() << "\n";
        if (j.contains("is_coboundary")) {
            std::cout << "coboundary: " << (j["is_coboundary"].get<bool>() ? "yes" : "no") << "\n";
            if (j.contains("preimage")) std::cout << "preimage: " << j["preimage"].dump() << "\n";
            if (j.contains("witness")) std::cout << "witness: " << j["witness"].dump() << "\n";
        }
    }
    return is_cocycle ? 0 : 1;
}

int cmd_reduce(const std::string& input, OutputFormat format) {
    SymbolicCochain c = SymbolicCochain::parse(read_file(input));
    Reduction red;
    try {
        red = reduce_mod_coboundaries(c);
    } catch (const NotACocycleError& e) {
        std::cerr << "not a cocycle; delta = " << e.delta << "\n";
        return 1;
    }
    nlohmann::ordered_json j;
    j["representative"] = red.representative.to_json();
    j["certificate"] = red.certificate.to_json();
    if (format == OutputFormat::Json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "representative: " << red.representative.serialize() << "\n";
        std::cout << "certificate:    " << red.certificate.serialize() << "\n";
    }
    return 0;
}

int cmd_selftest(int max_lambda) {
    SelftestReport report = run_selftest(max_lambda);
    for (const auto& c : report.checks) {
        if (c.passed)
            std::cout << "ok   " << c.name << " (" << c.checked << " checks)\n";
        else
            std::cout << "FAIL " << c.name << ": " << c.counterexample << "\n";
    }
    std::cout << (report.all_passed() ? "PASS" : "FAIL") << " " << report.checks.size()
              << " suites, " << report.total_checked() << " checks, max lambda " << max_lambda
              << "\n";
    if (!report.all_passed()) {
        const CheckResult* f = report.first_failure();
        std::cout << "first counterexample: " << f->name << ": " << f->counterexample << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chevalley-Eilenberg cohomology of Vect(R) acting on weighted densities"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    std::string fault;
    app.add_option("--inject-fault", fault)->check(CLI::IsMember({"binomial", "reference"}))
        ->group("");

    int arity = 3;
    int lambda = 0;
    int lambda_min = 0;
    int lambda_max = 0;
    bool relative = false;
    bool dump_matrices = false;
    bool coboundary_certificate = false;
    int max_lambda = 8;
    std::string input;

    auto* dim = app.add_subcommand("dim", "dimensions and representatives of one graded piece");
    dim->add_option("--arity", arity)->check(CLI::Range(1, 3));
    dim->add_option("--lambda", lambda)->required();
    dim->add_flag("--relative", relative, "aff(1)-relative complex");
    dim->add_flag("--dump-matrices", dump_matrices)->group("");

    auto* table = app.add_subcommand("table", "dimension table over a weight range");
    table->add_option("--arity", arity)->check(CLI::Range(1, 3));
    table->add_option("--lambda-min", lambda_min)->required();
    table->add_option("--lambda-max", lambda_max)->required();
    table->add_flag("--relative", relative, "aff(1)-relative complex");

    auto* basis = app.add_subcommand("basis", "basis tuples and representatives");
    basis->add_option("--arity", arity)->check(CLI::Range(1, 3));
    basis->add_option("--lambda", lambda)->required();
    basis->add_flag("--relative", relative, "aff(1)-relative complex");

    auto* check = app.add_subcommand("check", "verify a cochain document");
    check->add_option("--input", input, "cochain JSON file")->required();
    check->add_flag("--coboundary-certificate", coboundary_certificate,
                    "also decide coboundary membership with a certificate");

    auto* reduce = app.add_subcommand("reduce", "reduce a cocycle modulo coboundaries");
    reduce->add_option("--input", input, "cochain JSON file")->required();

    auto* selftest = app.add_subcommand("selftest", "run the invariant battery");
    selftest->add_option("--max-lambda", max_lambda, "weight bound for the sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    apply_fault(fault);
    OutputFormat fmt = parse_format(format);
    try {
        if (dim->parsed()) return cmd_dim(arity, lambda, relative, fmt, dump_matrices);
        if (table->parsed()) {
            if (lambda_min > lambda_max) {
                std::cerr << "table: --lambda-min must not exceed --lambda-max\n";
                return 2;
            }
            return cmd_table(arity, lambda_min, lambda_max, relative, fmt);
        }
        if (basis->parsed()) return cmd_basis(arity, lambda, relative, fmt);
        if (check->parsed()) return cmd_check(input, coboundary_certificate, fmt);
        if (reduce->parsed()) return cmd_reduce(input, fmt);
        if (selftest->parsed()) return cmd_selftest(max_lambda);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
