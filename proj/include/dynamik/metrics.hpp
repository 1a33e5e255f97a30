#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "dynamik/classify.hpp"
#include "dynamik/error.hpp"
#include "dynamik/style.hpp"

namespace dynamik {

/// Word-level totals for one text. Punctuation is never counted.
struct DensityReport {
  std::size_t total_words = 0;
  std::size_t content_words = 0;
  std::size_t function_words = 0;
  /// 100 * content / total, unrounded.
  double lexical_density_pct = 0.0;
  /// Footprint relative to uniform full-size text, width-proportional.
  double area_ratio_linear = 1.0;
  /// Same, but glyph area scales with the square of the size ratio.
  double area_ratio_quadratic = 1.0;

  double function_fraction() const noexcept {
    return total_words == 0 ? 0.0 : static_cast<double>(function_words) / static_cast<double>(total_words);
  }
};

/// Lexical density is undefined for a text with no words.
class UndefinedDensityError : public Error {
 public:
  UndefinedDensityError() : Error("undefined density: text has no words") {}
};

/// Throws UndefinedDensityError when `tokens` holds no word or numeral.
DensityReport density_report(std::span<const ClassifiedToken> tokens, const StyleConfig& cfg);

/// (1 - f) + f * r^e: the share of the original subtitle footprint left when
/// a fraction `f` of the words is drawn at `r` times full size.
///
/// With f = 0.4 and r = 2/3 the width reading (e = 1) gives 0.8667 and the
/// area reading (e = 2) gives 0.7778; a figure of "about 80 %" sits between
/// the two, so both are reported.
///
/// Throws ValidationError unless f is in [0, 1], r in (0, 1] and e is 1 or 2.
double area_ratio(double function_fraction, double size_ratio, int exponent);

/// Compact JSON object with the six report fields, in declaration order.
std::string to_json(const DensityReport& report);

}  // namespace dynamik
