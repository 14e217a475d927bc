#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "equispec/capture.hpp"
#include "equispec/constructions.hpp"

namespace equispec {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so the JSON text matches the plain-text output.
double round12(double x);

Json to_json(Complex z);
Json to_json(const Matrix& m);
Json to_json(const Partition& p);
Json to_json(const SpectrumSummary& s);
Json to_json(const QuotientResult& q);
Json to_json(const CaptureReport& r);
Json to_json(const InterlacingReport& r);
Json to_json(const Enlargement& e);
Json to_json(const ConstructedMatrix& c);
Json to_json(const Tolerances& t);

/// Top-level envelope shared by every subcommand.
Json document(const std::string& command, const std::string& input_description);

std::string text_report(const CaptureReport& r);
std::string text_report(const InterlacingReport& r);
std::string format_spectrum(const SpectrumSummary& s);

}  // namespace equispec
