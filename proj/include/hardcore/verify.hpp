#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/parallel.hpp"

namespace hardcore {

struct SuiteResult {
  std::string name;
  long checks = 0;
  long violations = 0;
  std::vector<std::string> failures;  // first few diagnostics only

  void record(bool ok, const std::string& detail);
};

struct VerifyOptions {
  int delta_min = 3;
  int delta_max = 12;
  std::uint64_t seed = 1;
  int corpus_size = 200;
  Exec exec = Exec::serial;
};

// Seeded connected graphs on 3..10 vertices, max degree <= 5, up to four
// edges beyond a spanning tree.  Deterministic given (seed, count).
std::vector<Graph> verification_corpus(std::uint64_t seed, int count);

// Complete graphs, cycles, paths and stars up to the given vertex count.
std::vector<Graph> named_small_graphs(int max_vertices);

// Scalar inequality grid over d = delta-1 for the whole delta range.
SuiteResult run_inequality_suite(const VerifyOptions& opts);
// Containment scans, boundary endpoint identities, curve anchors.
SuiteResult run_region_suite(const VerifyOptions& opts);
// Z_G divides Z of its self-avoiding-walk tree, exactly, over the corpus.
SuiteResult run_divisibility_suite(const VerifyOptions& opts);
// Roots of binary-tree polynomials clear the right unit half-disk, and
// sampled interior activities keep |Z| bounded away from zero.
SuiteResult run_zerofree_suite(const VerifyOptions& opts);

// which: one of all | inequalities | regions | divisibility | zerofree.
std::vector<SuiteResult> run_suites(const std::string& which,
                                    const VerifyOptions& opts);

}  // namespace hardcore
