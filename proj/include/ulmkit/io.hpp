#pragma once

// Text formats (.zmod, .zgrp) and JSON reports shared by the CLI and the
// Python bindings.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ulmkit/local_arith.hpp"
#include "ulmkit/presentation.hpp"
#include "ulmkit/ulm.hpp"
#include "ulmkit/zgroup.hpp"
#include "ulmkit/zmodule.hpp"

namespace ulmkit::io {

using json = nlohmann::ordered_json;

// `l <prime>`, `dim <d>`, `sigma`, then d rows of d entries in [0, l).
// Lines starting with '#' are comments. Throws ParseError with the position
// of the offending token; invariant violations are reported at `sigma`.
ZModule parse_zmod(std::string_view text);
ZModule read_zmod(const std::string& path);
std::string write_zmod(const ZModule& m);

// `l <prime>`, `order <n>`, `cayley`, n rows of n indices, `theta`, one row.
group::GroupPtr parse_zgrp(std::string_view text);
group::GroupPtr read_zgrp(const std::string& path);
std::string write_zgrp(const group::FinZGroup& g);

// "1 0 2; 0 1 1" -> rows of integers (reduced mod l by FpMatrix).
std::vector<std::vector<std::int64_t>> parse_rows(std::string_view text);
// "3,5,7" -> integers.
std::vector<std::uint64_t> parse_list(std::string_view text);

// Plain number up to 2^53, decimal string above.
json count(std::uint64_t n);

json matrix_json(const FpMatrix& m);
json ulm_json(const std::vector<std::size_t>& invariants);
json decomposition_json(const ulm::Decomposition& d);
json spectrum_json(const std::vector<arith::SpectrumEntry>& entries, bool detailed);
json global_height_json(const arith::CharacterSpec& spec, const arith::GlobalHeight& h);
json presentation_json(const present::Presentation& p);
json error_json(const std::string& kind, const std::string& message);

}  // namespace ulmkit::io
