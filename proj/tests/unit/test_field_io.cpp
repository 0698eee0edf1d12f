#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "gzk/errors.hpp"
#include "gzk/field_io.hpp"
#include "gzk/transform.hpp"
#include "oracles.hpp"

using namespace gzk;

TEST_CASE("binary and text round trips are exact") {
  std::mt19937_64 rng(1);
  const auto g = make_grid(16, 8, 40.0, 3.25);
  const Field f = oracle::random_field(g, rng);
  const Field s = forward(f);
  for (const Field* x : {&f, &s}) {
    std::stringstream bin;
    write_field_binary(bin, *x);
    const Field b = read_field_binary(bin);
    CHECK(b.grid() == x->grid());
    CHECK(b.representation() == x->representation());
    CHECK(b.data() == x->data());

    std::stringstream txt;
    write_field_text(txt, *x);
    const Field t = read_field_text(txt);
    CHECK(t.representation() == x->representation());
    CHECK(t.data() == x->data());
  }
}

TEST_CASE("binary header layout") {
  const Field f(make_grid(8, 8, 1.0, 2.0), Representation::Spectral);
  std::stringstream bin;
  write_field_binary(bin, f);
  const std::string bytes = bin.str();
  CHECK(bytes.size() == 4 + 4 + 8 + 8 + 8 + 8 + 1 + 64 * 16);
  CHECK(bytes.substr(0, 4) == "GZKF");
  CHECK(bytes[40] == 1);
}

TEST_CASE("text header") {
  const Field f(make_grid(8, 16, 1.5, 2.0), Representation::Physical);
  std::stringstream txt;
  write_field_text(txt, f);
  std::string first;
  std::getline(txt, first);
  CHECK(first == "GZKF 1 8 16 1.5 2 physical");
}

TEST_CASE("malformed files are rejected") {
  std::stringstream junk("NOPE....");
  CHECK_THROWS_AS(read_field_binary(junk), ValidationError);
  const Field f(make_grid(8, 8, 1.0, 1.0), Representation::Physical);
  std::stringstream bin;
  write_field_binary(bin, f);
  std::stringstream cut(bin.str().substr(0, 100));
  CHECK_THROWS_AS(read_field_binary(cut), ValidationError);
  std::stringstream badgrid("GZKF 1 12 8 1 1 physical\n");
  CHECK_THROWS_AS(read_field_text(badgrid), ValidationError);
}

TEST_CASE("save and load by extension") {
  const auto dir = std::filesystem::temp_directory_path() / "gzk_field_io_test";
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(4);
  const Field f = oracle::random_field(make_grid(8, 8, 2.0, 2.0), rng);
  save_field(dir / "f.gzkf", f);
  save_field(dir / "f.txt", f);
  CHECK(load_field(dir / "f.gzkf").data() == f.data());
  CHECK(load_field(dir / "f.txt").data() == f.data());
  std::filesystem::remove_all(dir);
}
