#include "equispec/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "equispec/io.hpp"

namespace equispec {

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr) + 0.0;
}

Json to_json(Complex z) { return Json{{"re", round12(z.real())}, {"im", round12(z.imag())}}; }

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (double v : m.row(i)) row.push_back(round12(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Partition& p) {
    Json cells = Json::array();
    for (const auto& c : p.cells()) {
        Json cell = Json::array();
        for (std::size_t e : c) cell.push_back(e + 1);
        cells.push_back(std::move(cell));
    }
    return Json{{"order", p.size()}, {"cells", std::move(cells)}, {"text", p.to_string()}};
}

Json to_json(const SpectrumSummary& s) {
    Json values = Json::array();
    for (const auto& e : s.eigenvalues) {
        Json v = to_json(e.value);
        v["multiplicity"] = e.multiplicity;
        values.push_back(std::move(v));
    }
    return Json{{"eigenvalues", std::move(values)},
                {"cluster_tolerance", round12(s.cluster_tolerance)},
                {"spectral_radius", round12(s.spectral_radius)}};
}

Json to_json(const QuotientResult& q) {
    return Json{{"matrix", to_json(q.quotient)},
                {"equitable", q.equitable},
                {"max_row_sum_deviation", round12(q.max_row_sum_deviation)},
                {"tolerance", round12(q.tolerance)}};
}

Json to_json(const CaptureReport& r) {
    Json rows = Json::array();
    Json missing = Json::array();
    for (const auto& e : r.per_eigenvalue) {
        Json row = to_json(e.value);
        row["multiplicity"] = e.multiplicity;
        row["in_quotient"] = e.in_quotient;
        row["eigenspace_dim"] = e.eigenspace_dim;
        row["intersection_dim"] = e.intersection_dim;
        rows.push_back(std::move(row));
        if (!e.in_quotient) missing.push_back(to_json(e.value));
    }
    return Json{{"partition", to_json(r.partition)},
                {"quotient", to_json(r.quotient)},
                {"parent_spectrum", to_json(r.parent_spectrum)},
                {"quotient_spectrum", to_json(r.quotient_spectrum)},
                {"capture",
                 Json{{"full_capture", r.full_capture},
                      {"equitable", r.equitable},
                      {"quotient_contained", r.quotient_contained},
                      {"eigenvalues", std::move(rows)},
                      {"missing", std::move(missing)}}}};
}

Json to_json(const InterlacingReport& r) {
    Json parent = Json::array(), quo = Json::array();
    for (double v : r.parent_sorted) parent.push_back(round12(v));
    for (double v : r.quotient_sorted) quo.push_back(round12(v));
    return Json{{"parent_sorted", std::move(parent)},
                {"quotient_sorted", std::move(quo)},
                {"interlaces", r.interlaces},
                {"tight", r.tight},
                {"tight_split_k", r.tight_split_k ? Json(*r.tight_split_k) : Json(nullptr)},
                {"tolerance", round12(r.tolerance)}};
}

Json to_json(const Enlargement& e) {
    Json j = to_json(e.report);
    Json out{{"splits", e.splits}};
    for (auto& [k, v] : j.items()) out[k] = v;
    return out;
}

Json to_json(const ConstructedMatrix& c) {
    Json params = Json::object();
    for (const auto& [k, v] : c.params) params[k] = round12(v);
    Json expected = Json::array();
    for (std::size_t i = 0; i < c.expected_distinct.size(); ++i) {
        Json v = to_json(c.expected_distinct[i]);
        v["multiplicity"] = c.expected_multiplicities[i];
        expected.push_back(std::move(v));
    }
    return Json{{"family", c.family_name},
                {"params", std::move(params)},
                {"matrix", to_json(c.matrix)},
                {"partition", to_json(c.designated_partition)},
                {"expected_spectrum", std::move(expected)}};
}

Json to_json(const Tolerances& t) {
    auto value = [](double v) { return v > 0.0 ? Json(round12(v)) : Json(nullptr); };
    return Json{{"equitable", value(t.equitable)}, {"cluster", value(t.cluster)}, {"rank", value(t.rank)}};
}

Json document(const std::string& command, const std::string& input_description) {
    return Json{{"tool", "equispec"}, {"version", kToolVersion}, {"command", command}, {"input", input_description}};
}

std::string format_spectrum(const SpectrumSummary& s) {
    std::string out;
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        if (i) out += ", ";
        out += format_complex(s.eigenvalues[i].value);
        if (s.eigenvalues[i].multiplicity > 1) out += "^" + std::to_string(s.eigenvalues[i].multiplicity);
    }
    return out;
}

std::string text_report(const CaptureReport& r) {
    std::ostringstream os;
    os << "partition: " << r.partition.to_string() << '\n';
    os << "quotient (" << (r.equitable ? "equitable" : "not equitable") << ", max row-sum deviation "
       << format_number(round12(r.quotient.max_row_sum_deviation)) << "):\n";
    for (std::size_t i = 0; i < r.quotient.quotient.rows(); ++i) {
        os << ' ';
        for (double v : r.quotient.quotient.row(i)) os << ' ' << format_number(round12(v));
        os << '\n';
    }
    os << "parent spectrum: " << format_spectrum(r.parent_spectrum) << '\n';
    os << "quotient spectrum: " << format_spectrum(r.quotient_spectrum) << '\n';
    os << "eigenvalue\tmult\tdim E\tdim E^W\tin quotient\n";
    for (const auto& e : r.per_eigenvalue) {
        os << format_complex(e.value) << '\t' << e.multiplicity << '\t' << e.eigenspace_dim << '\t'
           << e.intersection_dim << '\t' << (e.in_quotient ? "yes" : "no") << '\n';
    }
    os << "full capture: " << (r.full_capture ? "yes" : "no");
    const auto missing = r.missing();
    if (!missing.empty()) {
        os << " (missing";
        for (std::size_t i = 0; i < missing.size(); ++i) os << (i ? ", " : " ") << format_complex(missing[i]);
        os << ')';
    }
    os << '\n';
    return os.str();
}

std::string text_report(const InterlacingReport& r) {
    std::ostringstream os;
    auto list = [&](const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << format_number(round12(v[i]));
        os << '\n';
    };
    os << "parent (descending): ";
    list(r.parent_sorted);
    os << "quotient (descending): ";
    list(r.quotient_sorted);
    os << "interlaces: " << (r.interlaces ? "yes" : "no") << '\n';
    os << "tight: " << (r.tight ? "yes (k = " + std::to_string(*r.tight_split_k) + ")" : std::string("no")) << '\n';
    return os.str();
}

}  // namespace equispec
