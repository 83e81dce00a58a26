#include "vectcoh/table.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace vectcoh {

std::vector<TableRow> compute_table(int arity, int lambda_min, int lambda_max, bool relative) {
    if (lambda_min > lambda_max)
        throw std::invalid_argument("compute_table: lambda_min exceeds lambda_max");
    std::vector<std::future<CohomologyReport>> pending;
    for (int lam = lambda_min; lam <= lambda_max; ++lam)
        pending.push_back(std::async(std::launch::async | std::launch::deferred,
                                     [=] { return cohomology(arity, lam, relative); }));
    std::vector<TableRow> rows;
    for (int lam = lambda_min; lam <= lambda_max; ++lam) {
        TableRow row;
        row.lambda = lam;
        row.relative = relative;
        row.report = pending[static_cast<size_t>(lam - lambda_min)].get();
        row.reference_dim = row.report.reference_dim;
        row.divergent = row.report.divergent_from_reference;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool any_divergent(const std::vector<TableRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.divergent; });
}

namespace {

std::string tuple_str(const OrderTuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string cochain_str(const SymbolicCochain& c) {
    if (c.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, coeff] : c.terms()) {
        if (!first) s += coeff.sign() > 0 ? " + " : " - ";
        else if (coeff.sign() < 0)
            s += "-";
        first = false;
        Rational a = coeff.sign() < 0 ? -coeff : coeff;
        if (a != Rational(1)) s += a.str() + "*";
        s += "det" + tuple_str(t);
    }
    return s;
}

}  // namespace

std::string format_table(const std::vector<TableRow>& rows, int arity, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Json: {
            auto j = nlohmann::ordered_json::array();
            for (const auto& r : rows) j.push_back(r.report.to_json());
            os << j.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv: {
            os << "lambda,relative,dim_cochains,dim_cocycles,dim_coboundaries,dim_cohomology,"
                  "reference_dim,divergent\n";
            for (const auto& r : rows) {
                os << r.lambda << "," << (r.relative ? "true" : "false") << ","
                   << r.report.dim_cochains << "," << r.report.dim_cocycles << ","
                   << r.report.dim_coboundaries << "," << r.report.dim_cohomology << ",";
                if (r.reference_dim) os << *r.reference_dim;
                os << "," << (r.divergent ? "true" : "false") << "\n";
            }
            break;
        }
        case OutputFormat::Text: {
            os << "dim H^" << arity << "(Vect(R)" << (rows.empty() || !rows.front().relative ? "" : ", aff(1)")
               << "; F_lambda)\n";
            os << "lambda  dim C  dim Z  dim B  dim H  reference  status\n";
            for (const auto& r : rows) {
                char buf[128];
                std::string ref = r.reference_dim ? std::to_string(*r.reference_dim) : "-";
                std::snprintf(buf, sizeof(buf), "%6d  %5d  %5d  %5d  %5d  %9s  %s\n", r.lambda,
                              r.report.dim_cochains, r.report.dim_cocycles,
                              r.report.dim_coboundaries, r.report.dim_cohomology, ref.c_str(),
                              r.divergent ? "DIVERGENT" : "ok");
                os << buf;
            }
            for (const auto& r : rows) {
                if (!r.divergent) continue;
                os << "\ndivergent at lambda = " << r.lambda << " (computed "
                   << r.report.dim_cohomology << ", reference " << *r.reference_dim << ")\n";
                for (const auto& c : r.report.coboundary_certificates)
                    os << "  coboundary: " << cochain_str(c.cocycle) << " = delta( "
                       << cochain_str(c.preimage) << " )\n";
                for (const auto& c : r.report.certificates) {
                    os << "  non-coboundary representative: " << cochain_str(c.representative)
                       << "  witness (";
                    for (size_t i = 0; i < c.witness.size(); ++i)
                        os << (i ? "," : "") << c.witness[i].str();
                    os << ")\n";
                }
            }
            break;
        }
    }
    return os.str();
}

std::string format_report(const CohomologyReport& report, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Json:
            os << report.to_json().dump(2) << "\n";
            break;
        case OutputFormat::Csv: {
            os << "lambda,relative,dim_cochains,dim_cocycles,dim_coboundaries,dim_cohomology,"
                  "reference_dim,divergent\n";
            os << report.lambda << "," << (report.relative ? "true" : "false") << ","
               << report.dim_cochains << "," << report.dim_cocycles << ","
               << report.dim_coboundaries << "," << report.dim_cohomology << ",";
            if (report.reference_dim) os << *report.reference_dim;
            os << "," << (report.divergent_from_reference ? "true" : "false") << "\n";
            break;
        }
        case OutputFormat::Text: {
            os << "H^" << report.arity << " at lambda = " << report.lambda
               << (report.relative ? " (aff(1)-relative)" : " (absolute)") << "\n";
            os << "  dim cochains      = " << report.dim_cochains << "\n";
            os << "  dim cocycles      = " << report.dim_cocycles << "\n";
            os << "  dim coboundaries  = " << report.dim_coboundaries << "\n";
            os << "  dim cohomology    = " << report.dim_cohomology << "\n";
            if (report.reference_dim)
                os << "  reference dim     = " << *report.reference_dim
                   << (report.divergent_from_reference ? "  DIVERGENT" : "  ok") << "\n";
            for (const auto& r : report.representatives)
                os << "  representative: " << cochain_str(r) << "\n";
            if (report.divergent_from_reference) {
                for (const auto& c : report.coboundary_certificates)
                    os << "  coboundary: " << cochain_str(c.cocycle) << " = delta( "
                       << cochain_str(c.preimage) << " )\n";
            }
            break;
        }
    }
    return os.str();
}

}  // namespace vectcoh
