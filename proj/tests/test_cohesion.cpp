#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classcut/cohesion.hpp"
#include "helpers.hpp"

using namespace classcut;

namespace {

std::set<MemberId> ids(std::initializer_list<std::uint32_t> xs) {
  std::set<MemberId> out;
  for (auto x : xs)
    out.insert(MemberId{x});
  return out;
}

} // namespace

TEST_CASE("a class with one shared concern is cohesive") {
  auto g = load_cdl_fixture("cohesive.cdl");
  CHECK(lcom(g) == 0);
  CHECK(tcc(g, TccMode::Direct) == 1.0);
  auto report = assess(g, 0, 0.5);
  CHECK(report.verdict == Verdict::Acceptable);
  CHECK(report.method_count == 3);
}

TEST_CASE("the multi-concern fixture scores as low-cohesive") {
  auto g = load_cdl_fixture("bank.cdl");
  // 28 of 55 method pairs share no field, 27 share at least one
  CHECK(lcom(g) == 1);
  CHECK(tcc(g, TccMode::Direct) == doctest::Approx(27.0 / 55.0));
  auto report = assess(g, 0, 0.5);
  CHECK(report.verdict == Verdict::LowCohesion);
  CHECK(report.method_count == 11);
}

TEST_CASE("subset views confine both metrics to the cluster") {
  auto g = load_cdl_fixture("bank.cdl");
  // customer cluster: addCust, updateAddr, displayAddr + CustId, PermAddr, CommnAddr
  auto customer = ids({5, 6, 7, 16, 17, 18});
  CHECK(lcom(g, &customer) == 0);
  CHECK(tcc(g, TccMode::Direct, &customer) == 1.0);
  auto report = assess(g, 0, 0.5, TccMode::Direct, &customer);
  CHECK(report.verdict == Verdict::Acceptable);
  CHECK(report.method_count == 3);

  // fields outside the view do not connect methods inside it
  auto pair = ids({5, 8}); // addCust and apprLoan share only CustName, not in view
  CHECK(tcc(g, TccMode::Direct, &pair) == 0.0);
  CHECK(lcom(g, &pair) == 1);
}

TEST_CASE("fewer than two methods leaves TCC undefined") {
  auto g = parse_cdl("class One { method only uses f; field f; }");
  CHECK_FALSE(tcc(g, TccMode::Direct).has_value());
  CHECK(lcom(g) == 0);
  CHECK(assess(g, 0, 0.5).verdict == Verdict::Indeterminate);
}

TEST_CASE("call closure connects methods through their callees") {
  auto g = parse_cdl("class C {\n"
                     "  method a calls c;\n"
                     "  method b uses f;\n"
                     "  method c uses f;\n"
                     "  field f;\n"
                     "}");
  // directly, a touches no field at all
  CHECK(tcc(g, TccMode::Direct) == doctest::Approx(1.0 / 3.0));
  // through the closure, a inherits f from c and connects to both b and c
  CHECK(tcc(g, TccMode::CallClosure) == 1.0);

  // the closure respects the subset view: with c outside, a stays isolated
  auto view = ids({0, 1, 3}); // a, b, f
  CHECK(tcc(g, TccMode::CallClosure, &view) == 0.0);
}

TEST_CASE("call cycles terminate and share fields both ways") {
  auto g = parse_cdl("class C {\n"
                     "  method a uses f calls b;\n"
                     "  method b uses g calls a;\n"
                     "  field f;\n"
                     "  field g;\n"
                     "}");
  CHECK(tcc(g, TccMode::Direct) == 0.0);
  CHECK(tcc(g, TccMode::CallClosure) == 1.0);
}

TEST_CASE("thresholds shift the verdict boundary") {
  auto g = load_cdl_fixture("bank.cdl");
  CHECK(assess(g, 0, 0.5).verdict == Verdict::LowCohesion);
  CHECK(assess(g, 1, 0.5).verdict == Verdict::Acceptable);  // lcom must exceed threshold
  CHECK(assess(g, 0, 0.4).verdict == Verdict::Acceptable);  // tcc 0.49 is above 0.4
}
