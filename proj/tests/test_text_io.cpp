#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tensordeg/catalog.hpp"
#include "tensordeg/errors.hpp"
#include "tensordeg/text_io.hpp"

using namespace tdeg;

TEST_CASE("parse Z2 group text") {
  std::istringstream in("2\n0 1\n1 0\n");
  const auto g = parse_group_text(in, "Z2");
  CHECK(g->order() == 2);
  CHECK(g->label() == "Z2");
  CHECK(g->mul(1, 1) == 0);
}

TEST_CASE("group text errors carry a line") {
  {
    std::istringstream in("2\n1 0\n0 1\n");
    CHECK_THROWS_AS(parse_group_text(in, "x"), ParseError);
  }
  {
    std::istringstream in("2\n0 1\n1\n");
    try {
      parse_group_text(in, "x");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  {
    std::istringstream in("two\n");
    CHECK_THROWS_AS(parse_group_text(in, "x"), ParseError);
  }
  {
    std::istringstream in("2\n0 1\n1 1\n");
    CHECK_THROWS(parse_group_text(in, "x"));
  }
}

TEST_CASE("group text round trip through a file") {
  const auto s3 = catalog_group("S3");
  const auto path = std::filesystem::temp_directory_path() / "tensordeg_s3_roundtrip.txt";
  std::ofstream(path) << format_group_text(*s3);
  const auto back = parse_group_file(path);
  CHECK(back->label() == "tensordeg_s3_roundtrip");
  for (Elem a = 0; a < 6; ++a) CHECK(std::ranges::equal(back->row(a), s3->row(a)));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_group_file(path), Error);
}

TEST_CASE("presentation text") {
  std::istringstream in("gens 2\n1,1\n\n2,2,2\n1,2,1,2\n");
  const Presentation p = parse_presentation_text(in);
  CHECK(p.ngens() == 2);
  CHECK(p.relators().size() == 3);
  CHECK(p == Presentation(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}}));

  std::istringstream again(format_presentation(p));
  CHECK(parse_presentation_text(again) == p);

  std::istringstream bad_header("generators 2\n");
  CHECK_THROWS_AS(parse_presentation_text(bad_header), ParseError);
  std::istringstream bad_word("gens 1\n1,x\n");
  CHECK_THROWS_AS(parse_presentation_text(bad_word), ParseError);
  std::istringstream bad_index("gens 1\n2\n");
  CHECK_THROWS(parse_presentation_text(bad_index));
}
