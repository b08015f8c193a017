#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace picard;
using namespace picard::testing;

#ifndef PICARD_TEST_DATA_DIR
#error "PICARD_TEST_DATA_DIR must be defined"
#endif

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes content into a temp file and removes it on scope exit.
class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_((std::filesystem::temp_directory_path() / ("group-data-test-" + name)).string()) {
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

constexpr const char* kIdentityMatrix = "[[[1, 0], [0, 0]], [[0, 0], [1, 0]]]";

// A minimal well-formed dataset document built around a chosen generator
// entry, used to probe the load-time validation.
std::string doc_with_generator(const std::string& matrix) {
  std::ostringstream os;
  os << "{\n\"name\": \"X+\",\n\"generators\": [" << matrix;
  for (int k = 1; k < 5; ++k) os << ", " << kIdentityMatrix;
  os << "],\n\"reflection_words\": [[1], [2], [3], [4], [5]],\n";
  os << "\"auxiliaries\": {},\n";
  os << "\"witnesses\": [\"g1\", \"g1\", \"g1\", \"g1\", \"g1\", \"g1\"]\n}\n";
  return os.str();
}

}  // namespace

TEST_CASE("hash function matches the published FNV-1a 64 vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  Rng rng(0x666e760001ULL);  // fixed seed, recorded
  for (int k = 0; k < 1000; ++k) {
    std::string bytes;
    for (long j = rng.integer(0, 40); j > 0; --j)
      bytes.push_back(static_cast<char>(rng.integer(0, 255)));
    CHECK(fnv1a64(bytes) == fnv1a64_reference(bytes));
  }
}

TEST_CASE("bundled files load, validate, and checksum") {
  const std::vector<std::string>& names = dataset_filenames();
  CHECK(names == std::vector<std::string>{"a_plus.json", "b_plus.json", "c_plus.json",
                                          "d_plus.json", "e_plus.json"});

  std::vector<ManifoldGroupData> all = load_all_datasets(PICARD_TEST_DATA_DIR);
  REQUIRE(all.size() == 5);
  const std::vector<std::string> expect_names = {"A+", "B+", "C+", "D+", "E+"};
  GaussianIdeal one_plus_i(gi(1, 1));
  for (std::size_t k = 0; k < 5; ++k) {
    const ManifoldGroupData& data = all[k];
    CHECK(data.name == expect_names[k]);
    REQUIRE(data.generators.size() == 5);
    REQUIRE(data.reflection_words.size() == 5);
    REQUIRE(data.witnesses.size() == 6);
    for (const MoebiusElement& g : data.generators) {
      CHECK(g.in_psl());
      CHECK(in_principal_congruence(g, one_plus_i));
    }
    // The recorded checksum is the hash of the file bytes.
    std::string bytes = read_file(std::string(PICARD_TEST_DATA_DIR) + "/" + names[k]);
    CHECK(data.checksum == fnv1a64_reference(bytes));
    // Every witness resolves.
    for (const std::string& w : data.witnesses) CHECK_NOTHROW(data.element_for(w));
  }
}

TEST_CASE("token resolution against generators, l, and auxiliaries") {
  ManifoldGroupData a_plus =
      load_dataset(std::string(PICARD_TEST_DATA_DIR) + "/a_plus.json");

  CHECK(a_plus.element_for("g1") == a_plus.generators[0]);
  CHECK(a_plus.element_for("g5") == a_plus.generators[4]);
  CHECK(a_plus.element_for("g1^-1") == a_plus.generators[0].inverse());
  CHECK(a_plus.element_for("g1^2") == a_plus.generators[0] * a_plus.generators[0]);
  CHECK(a_plus.element_for("l") == picard_l());
  CHECK(a_plus.element_for("l g1 l^-1") ==
        picard_l() * a_plus.generators[0] * picard_l().inverse());
  CHECK(a_plus.element_for("g1 g4") == a_plus.generators[0] * a_plus.generators[3]);
  CHECK(a_plus.element_for("g2^-2") ==
        (a_plus.generators[1] * a_plus.generators[1]).inverse());

  CHECK_THROWS_AS(a_plus.element_for("g9"), std::invalid_argument);
  CHECK_THROWS_AS(a_plus.element_for("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(a_plus.element_for("g1^0"), std::invalid_argument);
  CHECK_THROWS_AS(a_plus.element_for("g1^x"), std::invalid_argument);
  CHECK_THROWS_AS(a_plus.element_for("^2"), std::invalid_argument);
}

TEST_CASE("auxiliary element: resolved product and congruence") {
  ManifoldGroupData a_plus =
      load_dataset(std::string(PICARD_TEST_DATA_DIR) + "/a_plus.json");
  REQUIRE(a_plus.auxiliaries.count("beta") == 1);
  const AuxiliaryElement& beta = a_plus.auxiliaries.at("beta");

  // The resolved element is word * factor.
  CHECK(beta.element == a_plus.element_for(beta.word) * beta.factor);
  CHECK(a_plus.element_for("beta") == beta.element);

  // The factor is congruent to the identity mod 2+2i, witnessing membership.
  GaussianIdeal level(gi(2, 2));
  CHECK(in_principal_congruence(beta.factor, level));

  // The display identity: cancelling the word part leaves exactly the factor.
  MoebiusElement display = a_plus.element_for("g2^-1 g1 g3 beta");
  CHECK(display == mat2(5, 8, 10, -2, 18, 6, 13, -16));
  CHECK(display == beta.factor);
  CHECK(in_principal_congruence(display, level));
}

TEST_CASE("the conjugator l normalizes every recorded group image") {
  std::vector<ManifoldGroupData> all = load_all_datasets(PICARD_TEST_DATA_DIR);
  GaussianIdeal level(gi(2, 2));
  CongruenceQuotient quotient(level);
  for (const ManifoldGroupData& data : all) {
    CHECK(quotient.element_normalizes_subgroup(picard_l(), data.generators));
    // And the congruence image has index 48 in the full quotient.
    CHECK(quotient.order() / quotient.subgroup_order(data.generators) == 48);
  }
}

TEST_CASE("load-time validation rejects corrupt files") {
  SUBCASE("missing file") {
    CHECK_THROWS_WITH_AS(load_dataset("/nonexistent/nowhere.json"),
                         doctest::Contains("cannot open"), std::runtime_error);
  }
  SUBCASE("malformed JSON") {
    TempFile f("malformed.json", "{ not json");
    CHECK_THROWS_AS(load_dataset(f.path()), std::runtime_error);
  }
  SUBCASE("valid skeleton loads") {
    TempFile f("valid.json", doc_with_generator(kIdentityMatrix));
    ManifoldGroupData data = load_dataset(f.path());
    CHECK(data.name == "X+");
    CHECK(data.generators[0] == MoebiusElement::identity());
  }
  SUBCASE("determinant 2 is rejected") {
    TempFile f("det2.json", doc_with_generator("[[[1, 0], [0, 0]], [[0, 0], [2, 0]]]"));
    CHECK_THROWS_WITH_AS(load_dataset(f.path()), doctest::Contains("determinant is 2"),
                         std::runtime_error);
  }
  SUBCASE("determinant i is rejected even though it is a unit") {
    TempFile f("deti.json", doc_with_generator("[[[1, 0], [0, 0]], [[0, 0], [0, 1]]]"));
    CHECK_THROWS_WITH_AS(load_dataset(f.path()), doctest::Contains("determinant"),
                         std::runtime_error);
  }
  SUBCASE("generator outside the level (1+i) subgroup is rejected") {
    // [[1, 1], [0, 1]] has determinant 1 but is not congruent to the
    // identity mod 1+i.
    TempFile f("level.json", doc_with_generator("[[[1, 0], [1, 0]], [[0, 0], [1, 0]]]"));
    CHECK_THROWS_WITH_AS(load_dataset(f.path()),
                         doctest::Contains("not congruent to the identity"), std::runtime_error);
  }
  SUBCASE("wrong generator count") {
    std::string doc = doc_with_generator(kIdentityMatrix);
    // Drop the last generator: "..., ID]" -> "]".
    auto pos = doc.rfind(std::string(", ") + kIdentityMatrix);
    REQUIRE(pos != std::string::npos);
    doc.erase(pos, std::string(", ").size() + std::string(kIdentityMatrix).size());
    TempFile f("four.json", doc);
    CHECK_THROWS_WITH_AS(load_dataset(f.path()), doctest::Contains("exactly 5"),
                         std::runtime_error);
  }
  SUBCASE("wrong witness count") {
    std::string doc = doc_with_generator(kIdentityMatrix);
    auto pos = doc.rfind("\"g1\", \"g1\"]");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, std::string("\"g1\", \"g1\"]").size(), "\"g1\"]");
    TempFile f("fivewit.json", doc);
    CHECK_THROWS_WITH_AS(load_dataset(f.path()), doctest::Contains("exactly 6"),
                         std::runtime_error);
  }
  SUBCASE("unresolvable witness") {
    std::string doc = doc_with_generator(kIdentityMatrix);
    auto pos = doc.rfind("\"g1\"]");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, 5, "\"g9\"]");
    TempFile f("badwit.json", doc);
    CHECK_THROWS_WITH_AS(load_dataset(f.path()), doctest::Contains("witness"),
                         std::runtime_error);
  }
  SUBCASE("reflection letter out of range") {
    std::string doc = doc_with_generator(kIdentityMatrix);
    auto pos = doc.find("[[1], [2], [3], [4], [5]]");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, std::string("[[1], [2], [3], [4], [5]]").size(),
                "[[1], [2], [3], [4], [7]]");
    TempFile f("badletter.json", doc);
    CHECK_THROWS_WITH_AS(load_dataset(f.path()), doctest::Contains("out of range"),
                         std::runtime_error);
  }
}

TEST_CASE("loading a directory without the bundled files fails cleanly") {
  CHECK_THROWS_AS(load_all_datasets("/nonexistent-dir"), std::runtime_error);
}
