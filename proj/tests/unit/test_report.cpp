#include <doctest.h>

#include <nlohmann/json.hpp>

#include "gzk/errors.hpp"
#include "gzk/report.hpp"

using namespace gzk;

TEST_CASE("text round trip preserves values exactly") {
  NormReport r;
  r.set_meta("experiment", "commutator");
  r.set("residual_x", 1.0 / 3.0);
  r.set("bound_ratio", 1e-300);
  r.set("count", 42);
  const NormReport back = NormReport::from_text(r.to_text());
  CHECK(back.get("residual_x") == 1.0 / 3.0);
  CHECK(back.get("bound_ratio") == 1e-300);
  CHECK(back.meta("experiment") == "commutator");
  CHECK(back.to_text() == r.to_text());
}

TEST_CASE("text layout") {
  NormReport r;
  r.set("a", 0.5);
  CHECK(r.to_text() == "a = 0.5\n");
}

TEST_CASE("json output") {
  NormReport r;
  r.set_meta("hash", "abc");
  r.set("a", 2.0);
  r.set("b", std::numeric_limits<double>::infinity());
  r.flag("b");
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["values"]["a"] == 2.0);
  CHECK(j["values"]["b"].is_null());
  CHECK(j["metadata"]["hash"] == "abc");
  CHECK(r.all_finite());
}

TEST_CASE("non-finite values are caught unless flagged") {
  NormReport r;
  r.set("x", std::nan(""));
  CHECK_FALSE(r.all_finite());
  r.flag("x");
  CHECK(r.all_finite());
}

TEST_CASE("merge and lookup") {
  NormReport a, b;
  b.set("v", 1.0);
  a.merge(b, "t1.");
  CHECK(a.get("t1.v") == 1.0);
  CHECK_FALSE(a.find("v").has_value());
  CHECK_THROWS(a.get("v"));
  CHECK_THROWS(NormReport::from_text("no equals sign\n"));
}
