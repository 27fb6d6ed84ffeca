#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "bgp/exact.hpp"
#include "bgp/oracle.hpp"
#include "testutil.hpp"

using namespace bgp;

TEST_CASE("hand-checked instances") {
  Instance biclique =
      unit_instance(3, 2, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}});
  CHECK(exact_budget(biclique).budget == 3);

  Instance c6 =
      unit_instance(3, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 1}});
  CHECK(exact_budget(c6).budget == 2);

  Instance wpath = weighted_instance({2, 3}, {4, 1}, {{1, 1}, {1, 2}, {2, 2}});
  CHECK(exact_budget(wpath).budget == 4);

  CHECK(exact_budget(Instance::create({}, {}, {})).budget == 0);
}

TEST_CASE("agrees with the exhaustive oracle") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    int p = 1 + int(rng() % 5), q = 1 + int(rng() % 5);
    double dens = 0.2 + 0.6 * double(rng() % 100) / 100.0;
    Instance inst = random_instance(rng, p, q, dens, 6);
    auto ex = exact_budget(inst);
    auto br = brute_force_budget(inst);
    CHECK(ex.budget == br.budget);
    CHECK(is_valid_ordering(inst, ex.witness));
    CHECK(budget_of_ordering(inst, ex.witness) == ex.budget);
  }
}

TEST_CASE("mask order and size order fill identical tables") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = random_instance(rng, 5, 5, 0.4, 5);
    CHECK(exact_table_digest(inst, false) == exact_table_digest(inst, true));
  }
  ExactOptions layered;
  layered.layered = true;
  Instance c6 =
      unit_instance(3, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 1}});
  auto rep = exact_budget(c6, layered);
  CHECK(rep.budget == 2);
  CHECK(budget_of_ordering(c6, rep.witness) == 2);
}

TEST_CASE("refuses oversized instances with a memory estimate") {
  ExactOptions opt;
  opt.size_limit = 4;
  Instance inst = unit_instance(3, 2, {{1, 1}});
  try {
    exact_budget(inst, opt);
    CHECK(false);
  } catch (const UnknownResult& e) {
    CHECK(std::string(e.what()).find("MiB") != std::string::npos);
  }
}

TEST_CASE("environment variable adjusts the default limit") {
  int before = default_exact_limit();
  setenv("BGP_EXACT_LIMIT", "8", 1);
  CHECK(default_exact_limit() == 8);
  setenv("BGP_EXACT_LIMIT", "junk", 1);
  CHECK(default_exact_limit() == 26);
  unsetenv("BGP_EXACT_LIMIT");
  CHECK(default_exact_limit() == before);
}

TEST_CASE("deterministic reports") {
  std::mt19937_64 rng(5);
  Instance inst = random_instance(rng, 5, 5, 0.5, 6);
  auto a = exact_budget(inst);
  auto b = exact_budget(inst);
  CHECK(a.canonical_text(inst) == b.canonical_text(inst));
  CHECK(a.states == b.states);
}
