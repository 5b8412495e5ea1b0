#pragma once

#include <string>

#include "hurwitz/chambers.hpp"
#include "hurwitz/multipoly.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/patterns.hpp"
#include "hurwitz/series.hpp"

// String-level JSON serialization.  Formats:
//   partition        [3, 2, 1]
//   rational         "p/q" in lowest terms, q > 0 ("p" when q = 1)
//   series           {"pole_order": p, "coeffs": ["p/q", ...]}
//   polynomial       [{"exponents": [...], "coeff": "p/q"}, ...]
//   closed form      {"mu", "nu", "ordering": {"mu", "nu"},
//                     "patterns": [{"steps": [{"I","J","K","L"}], "sigma_args": [...]}]}
//   chamber poly     {"m","n","g","chamber":{"signs"},"full",
//                     "components": {"0": ..., ..., "g": ...}}
namespace hurwitz {
namespace json_io {

std::string partition_json(const Partition& p);
Partition partition_from_json(const std::string& text);

std::string series_json(const LaurentSeries& s);
LaurentSeries series_from_json(const std::string& text);

std::string multipoly_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const std::string& text, int nvars);

std::string closed_form_json(const patterns::ClosedForm& cf);
patterns::ClosedForm closed_form_from_json(const std::string& text);

std::string chamber_polynomial_json(const chambers::ChamberPolynomial& cp);

std::string spp_report_json(const chambers::SppReport& rep);

}  // namespace json_io
}  // namespace hurwitz
