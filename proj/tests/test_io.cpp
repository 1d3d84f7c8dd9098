#include "doctest.h"
#include "ulmkit/error.hpp"
#include "ulmkit/io.hpp"

using namespace ulmkit;

namespace {

void check_parse_error(void (*fn)(), std::size_t line, std::size_t column) {
  try {
    fn();
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("zmod round trip") {
  const char* text = "# comment\nl 2\ndim 3\nsigma\n1 0 0\n1 1 0\n0 1 1\n";
  const ZModule m = io::parse_zmod(text);
  CHECK(m == make_cyclic(2, 3));
  CHECK(io::parse_zmod(io::write_zmod(m)) == m);
  const ZModule g = make_group_algebra(3, 1);
  CHECK(io::parse_zmod(io::write_zmod(g)) == g);
}

TEST_CASE("zmod errors carry positions") {
  check_parse_error([] { io::parse_zmod("l 2\ndim 2\nsigma\n1 0\n1 x\n"); }, 5, 3);
  check_parse_error([] { io::parse_zmod("l 2\ndim 2\nsigma\n1 0\n1 2\n"); }, 5, 3);
  check_parse_error([] { io::parse_zmod("l 2\ndim 2\nsigma\n1 0\n"); }, 5, 1);
  check_parse_error([] { io::parse_zmod("l 2\nsize 2\n"); }, 2, 1);
  check_parse_error([] { io::parse_zmod("l 2\ndim 1\nsigma\n1\n1\n"); }, 5, 1);
  // Singular sigma: reported at the sigma keyword.
  check_parse_error([] { io::parse_zmod("l 2\ndim 2\n\nsigma\n1 1\n1 1\n"); }, 4, 1);
  // Not unipotent over F_3.
  check_parse_error([] { io::parse_zmod("l 3\ndim 1\nsigma\n2\n"); }, 3, 1);
  CHECK_THROWS_AS(io::parse_zmod("l 4\ndim 1\nsigma\n1\n"), ParseError);
}

TEST_CASE("zgrp round trip and errors") {
  auto g = group::cyclic_group(3, 2, 4);
  auto back = io::parse_zgrp(io::write_zgrp(*g));
  CHECK(*back == *g);
  // Z/2 table whose theta is not a homomorphism.
  check_parse_error([] { io::parse_zgrp("l 2\norder 2\ncayley\n0 1\n1 0\ntheta\n1 0\n"); }, 3, 1);
  check_parse_error([] { io::parse_zgrp("l 2\norder 2\ncayley\n0 1\n1 2\ntheta\n0 1\n"); }, 5, 3);
}

TEST_CASE("small parsers") {
  CHECK(io::parse_rows("1 0 2; 0 1 1") ==
        std::vector<std::vector<std::int64_t>>{{1, 0, 2}, {0, 1, 1}});
  CHECK(io::parse_rows("-1 3") == std::vector<std::vector<std::int64_t>>{{-1, 3}});
  CHECK_THROWS_AS(io::parse_rows("1 2; 3"), ParseError);
  CHECK(io::parse_list("3,5,7") == std::vector<std::uint64_t>{3, 5, 7});
  CHECK_THROWS_AS(io::parse_list("3,,5"), ParseError);
}

TEST_CASE("json builders") {
  CHECK(io::count(7) == 7);
  CHECK(io::count(std::uint64_t{1} << 53) == (std::uint64_t{1} << 53));
  CHECK(io::count((std::uint64_t{1} << 53) + 1) == "9007199254740993");
  CHECK(io::ulm_json({0, 0, 1}).dump() == R"({"ulm":[0,0,1]})");
  const auto spec = arith::ulm_spectrum(arith::CycloContext(3), 20);
  CHECK(io::spectrum_json(spec, false).dump() == R"({"heights":{"0":7,"2":19}})");
  CHECK(io::error_json("parse", "bad").dump() ==
        R"({"error":{"kind":"parse","message":"bad"}})");
  const auto d = ulm::decompose(make_cyclic(2, 3));
  const auto j = io::decomposition_json(d);
  CHECK(j["blocks"].size() == 1);
  CHECK(j["blocks"][0]["n"] == 3);
  CHECK(j["basis"].size() == 3);
}
