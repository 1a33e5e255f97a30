#include "dynamik/metrics.hpp"

#include <cmath>

#include "json.hpp"

namespace dynamik {

double area_ratio(double function_fraction, double size_ratio, int exponent) {
  if (!(function_fraction >= 0.0 && function_fraction <= 1.0))
    throw ValidationError("function fraction must lie in [0, 1]");
  if (!(size_ratio > 0.0 && size_ratio <= 1.0)) throw ValidationError("size ratio must lie in (0, 1]");
  if (exponent != 1 && exponent != 2) throw ValidationError("exponent must be 1 or 2");
  return (1.0 - function_fraction) + function_fraction * std::pow(size_ratio, exponent);
}

DensityReport density_report(std::span<const ClassifiedToken> tokens, const StyleConfig& cfg) {
  cfg.validate();
  DensityReport report;
  for (const auto& t : tokens) {
    switch (t.word_class.family()) {
      case Family::Content:
        ++report.content_words;
        break;
      case Family::Function:
        ++report.function_words;
        break;
      case Family::Punct:
        break;
    }
  }
  report.total_words = report.content_words + report.function_words;
  if (report.total_words == 0) throw UndefinedDensityError();

  report.lexical_density_pct =
      100.0 * static_cast<double>(report.content_words) / static_cast<double>(report.total_words);
  const double f = report.function_fraction();
  report.area_ratio_linear = area_ratio(f, cfg.size_ratio(), 1);
  report.area_ratio_quadratic = area_ratio(f, cfg.size_ratio(), 2);
  return report;
}

std::string to_json(const DensityReport& report) {
  nlohmann::ordered_json j;
  j["total_words"] = report.total_words;
  j["content_words"] = report.content_words;
  j["function_words"] = report.function_words;
  j["lexical_density_pct"] = report.lexical_density_pct;
  j["area_ratio_linear"] = report.area_ratio_linear;
  j["area_ratio_quadratic"] = report.area_ratio_quadratic;
  return j.dump();
}

}  // namespace dynamik
