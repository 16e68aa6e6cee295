#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "hullkit/errors.hpp"
#include "hullkit/families.hpp"
#include "hullkit/group.hpp"
#include "hullkit/group_io.hpp"

using namespace hullkit;

namespace {

std::string error_text(const std::string& document, int cap = kDefaultOrderCap) {
  try {
    parse_group_file(document, cap);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("permgroup documents parse, with comments and blank lines ignored") {
  const std::string doc =
      "# symmetric group on three points\n"
      "format: permgroup v1\n"
      "\n"
      "degree: 3\n"
      "(1 2)\n"
      "# a comment between generators\n"
      "(1 2 3)\n";
  FiniteGroup g = parse_group_file(doc);
  CHECK(g.order() == 6);
  CHECK(g.degree() == 3);
  CHECK(g.label(0) == "()");
  CHECK_NOTHROW(g.element_by_name("(1 3 2)"));
}

TEST_CASE("a permgroup document with no generators is the trivial group") {
  FiniteGroup g = parse_group_file("format: permgroup v1\ndegree: 4\n");
  CHECK(g.order() == 1);
  FiniteGroup point_free = parse_group_file("format: permgroup v1\ndegree: 0\n");
  CHECK(point_free.order() == 1);
}

TEST_CASE("cayley documents parse and keep decimal labels") {
  FiniteGroup trivial = parse_group_file("format: cayley v1\norder: 1\n0\n");
  CHECK(trivial.order() == 1);
  CHECK(trivial.label(0) == "0");

  FiniteGroup c2 = parse_group_file("format: cayley v1\norder: 2\n0 1\n1 0\n");
  CHECK(c2.order() == 2);
  CHECK(c2.mul(1, 1) == 0);
  CHECK(c2.degree() == 0);
}

TEST_CASE("groups round-trip through the cayley serialization") {
  for (const char* spec : {"symmetric:4", "dihedral:4", "quaternion8"}) {
    FiniteGroup g = build_family_spec(spec);
    CAPTURE(spec);
    FiniteGroup back = parse_group_file(to_cayley_file(g));
    CHECK(back.same_table(g));
    // serializing again reproduces the identical document
    CHECK(to_cayley_file(back) == to_cayley_file(g));
    CHECK(back.label(0) == "0");  // labels revert to ids
  }
}

TEST_CASE("document errors carry the offending line number") {
  CHECK(error_text("") == "empty group document");
  CHECK(error_text("# nothing but comments\n\n") == "empty group document");
  CHECK(error_text("format: magma v9\n").find("line 1: unknown header") == 0);
  CHECK(error_text("format: permgroup v1\n") ==
        "permgroup document is missing the degree line");
  CHECK(error_text("format: permgroup v1\ndeg 3\n").find("line 2: expected 'degree:") == 0);
  // a comment shifts the physical position but not the reported number
  CHECK(error_text("format: permgroup v1\n# filler\ndegree: x\n").find("line 3: degree must") ==
        0);
  // malformed generators name their own line
  std::string bad_cycle = error_text("format: permgroup v1\ndegree: 3\n(1 2)\n(1 5)\n");
  CHECK(bad_cycle.find("line 4:") == 0);
}

TEST_CASE("cayley table errors") {
  CHECK(error_text("format: cayley v1\norder: 2\n0 1\n") ==
        "cayley table needs exactly 2 rows, found 1");
  CHECK(error_text("format: cayley v1\norder: 2\n0 1\n1 5\n")
            .find("line 4: table entry 5 is outside 0..1") == 0);
  CHECK(error_text("format: cayley v1\norder: 2\n0 1\n1\n")
            .find("line 4: row has 1 entries, expected 2") == 0);
  CHECK(error_text("format: cayley v1\norder: 2\n0 1\n1 x\n")
            .find("line 4: table entry 'x' is not an element id") == 0);
  CHECK(error_text("format: cayley v1\norder: 0\n").find("line 2: order must be at least 1") ==
        0);

  // a well-formed grid that is not a group: (1·1)·2 != 1·(1·2)
  std::string not_assoc = error_text(
      "format: cayley v1\norder: 3\n"
      "0 1 2\n"
      "1 0 1\n"
      "2 1 0\n");
  CHECK(not_assoc.find("cayley table:") == 0);
  CHECK(not_assoc.find("not associative") != std::string::npos);
}

TEST_CASE("the order cap applies before any table work") {
  CHECK_THROWS_AS(parse_group_file("format: cayley v1\norder: 6000\n"), OrderCapError);
  try {
    parse_group_file("format: cayley v1\norder: 11\n", 10);
  } catch (const OrderCapError& e) {
    CHECK(e.cap == 10);
    CHECK(std::string(e.what()).find("group too large: order 11") == 0);
  }
}

TEST_CASE("loading from disk prefixes errors with the path") {
  CHECK_THROWS_AS(load_group_file("/nonexistent/group.txt"), FormatError);
  try {
    load_group_file("/nonexistent/group.txt");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()) == "cannot open group file: /nonexistent/group.txt");
  }

  const std::string path = "/tmp/hullkit-test-group.txt";
  {
    std::ofstream out(path);
    out << "format: permgroup v1\ndegree: 3\n(1 2)\n(1 2 3)\n";
  }
  FiniteGroup g = load_group_file(path);
  CHECK(g.order() == 6);

  {
    std::ofstream out(path);
    out << "format: permgroup v1\ndegree: 3\n(1 9)\n";
  }
  try {
    load_group_file(path);
    CHECK(false);
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find(path + ": line 3:") == 0);
  }
  std::remove(path.c_str());
}
