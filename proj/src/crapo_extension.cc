// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clique_ext/crapo_extension.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "json.hpp"

#include "clique_ext/errors.h"
#include "parallel.h"

namespace clique_ext {
namespace {

void check_hyperplane(GroundScale n, const Hyperplane& h) {
  if (h.partition.vertex_count() != n.vertex_count() ||
      h.partition.part_count() != 2) {
    throw InputError(h.partition.to_string() + " is not a hyperplane of M(K_" +
                     std::to_string(n.vertex_count()) + ")");
  }
}

// Cycle-matroid rank of an edge word, by union-find over the endpoints.
int edge_word_rank(std::uint64_t edges,
                   const std::vector<std::pair<int, int>>& slot_edges,
                   int vertex_count, std::vector<int>& parent) {
  parent.resize(vertex_count + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int r = 0;
  for (std::uint64_t rest = edges; rest != 0; rest &= rest - 1) {
    auto [i, j] = slot_edges[std::countr_zero(rest)];
    const int a = find(i);
    const int b = find(j);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      ++r;
    }
  }
  return r;
}

}  // namespace

std::optional<VertexPartition> linear_subclass_violation(
    GroundScale n, const std::vector<Hyperplane>& hyperplanes) {
  std::set<VertexPartition> members;
  for (const auto& h : hyperplanes) {
    check_hyperplane(n, h);
    members.insert(h.partition);
  }
  const std::vector<VertexPartition> list(members.begin(), members.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const VertexPartition meet = intersect_flats(list[i], list[j]);
      if (flat_rank(meet) != n.n() - 2) continue;
      for (const Hyperplane& h : hyperplanes_containing(meet)) {
        if (!members.contains(h.partition)) return meet;
      }
    }
  }
  return std::nullopt;
}

LinearSubclass::LinearSubclass(GroundScale n,
                               std::vector<Hyperplane> hyperplanes)
    : scale_(n), hyperplanes_(std::move(hyperplanes)) {
  std::sort(hyperplanes_.begin(), hyperplanes_.end(),
            [n](const Hyperplane& a, const Hyperplane& b) {
              return psi(a, n) < psi(b, n);
            });
  for (const auto& h : hyperplanes_) index_.insert(h.partition);
}

LinearSubclass LinearSubclass::from_hyperplanes(
    GroundScale n, std::vector<Hyperplane> hyperplanes) {
  if (auto flat = linear_subclass_violation(n, hyperplanes)) {
    throw ContractViolation("not a linear subclass: the flat " +
                            flat->to_string() +
                            " lies in two members and in a non-member");
  }
  LinearSubclass out(n, std::move(hyperplanes));
  if (out.index_.size() != out.hyperplanes_.size()) {
    throw InputError("linear subclass lists a hyperplane twice");
  }
  return out;
}

std::vector<Hyperplane> hyperplane_image(const SetFamily& b) {
  std::vector<Hyperplane> out;
  out.reserve(b.size());
  for (SubsetWord x : b.members()) out.push_back(psi_inverse(x, b.scale()));
  return out;
}

LinearSubclass subclass_from_family(const SetFamily& b) {
  if (auto t = violating_triple(b, FamilyKind::kLinear)) {
    throw ContractViolation("family " + b.to_string() +
                            " is not linear; witness " + t->to_string());
  }
  // from_hyperplanes re-checks the closure rule on the matroid side.
  return LinearSubclass::from_hyperplanes(b.scale(), hyperplane_image(b));
}

ModularCut::ModularCut(GroundScale n, std::vector<VertexPartition> flats)
    : scale_(n) {
  for (auto& f : flats) {
    if (f.vertex_count() != n.vertex_count()) {
      throw InputError("flat " + f.to_string() + " is not a flat of M(K_" +
                       std::to_string(n.vertex_count()) + ")");
    }
    flats_.insert(std::move(f));
  }
}

std::vector<SubsetWord> ModularCut::hyperplane_images() const {
  std::vector<SubsetWord> out;
  for (const auto& f : flats_) {
    if (f.part_count() == 2) {
      out.push_back(psi(Hyperplane::from_partition(f), scale_));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport check_modular_cut(const ModularCut& cut) {
  VerificationReport report("modular-cut");
  const std::vector<VertexPartition> every = all_flats(cut.scale());
  for (const auto& f : cut.flats()) {
    for (const auto& g : every) {
      ++report.cases_checked;
      if (f.refines(g) && !cut.contains(g)) {
        report.fail("not up-closed: " + f.to_string() + " is in the cut but " +
                    g.to_string() + " is not");
      }
    }
  }
  for (const auto& f : cut.flats()) {
    for (const auto& g : cut.flats()) {
      ++report.cases_checked;
      const VertexPartition meet = intersect_flats(f, g);
      const VertexPartition joined = join_flats(f, g);
      const bool modular = flat_rank(f) + flat_rank(g) ==
                           flat_rank(joined) + flat_rank(meet);
      if (modular && !cut.contains(meet)) {
        report.fail("modular pair " + f.to_string() + ", " + g.to_string() +
                    " meets outside the cut");
      }
    }
  }
  return report;
}

ModularCut generate_modular_cut(const LinearSubclass& h) {
  const GroundScale n = h.scale();
  std::vector<VertexPartition> members;
  for (const auto& f : all_flats(n)) {
    bool all_in = true;
    for (SubsetWord x : psi_of_hyperplanes_containing(f)) {
      if (!h.contains(psi_inverse(x, n).partition)) {
        all_in = false;
        break;
      }
    }
    if (all_in) members.push_back(f);
  }
  return ModularCut(n, std::move(members));
}

ModularCut modular_cut_closure(GroundScale n,
                               const std::vector<VertexPartition>& flats) {
  const std::vector<VertexPartition> every = all_flats(n);
  std::set<VertexPartition> cut(flats.begin(), flats.end());
  auto up_close = [&] {
    std::vector<VertexPartition> added;
    for (const auto& g : every) {
      if (cut.contains(g)) continue;
      for (const auto& f : cut) {
        if (f.refines(g)) {
          added.push_back(g);
          break;
        }
      }
    }
    cut.insert(added.begin(), added.end());
  };
  up_close();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VertexPartition> meets;
    for (const auto& f : cut) {
      for (const auto& g : cut) {
        const VertexPartition meet = intersect_flats(f, g);
        if (cut.contains(meet)) continue;
        if (flat_rank(f) + flat_rank(g) ==
            flat_rank(join_flats(f, g)) + flat_rank(meet)) {
          meets.push_back(meet);
        }
      }
    }
    if (!meets.empty()) {
      cut.insert(meets.begin(), meets.end());
      up_close();
      grew = true;
    }
  }
  return ModularCut(n, std::vector<VertexPartition>(cut.begin(), cut.end()));
}

std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::kLoop:
      return "loop";
    case ElementClass::kColoop:
      return "coloop";
    case ElementClass::kOrdinary:
      return "ordinary";
  }
  return "ordinary";
}

ExtensionMatroid::ExtensionMatroid(ModularCut cut) : cut_(std::move(cut)) {
  const int v = cut_.scale().vertex_count();
  edge_count_ = v * (v - 1) / 2;
  if (edge_count_ + 1 > 63) {
    throw ResourceLimitError("extension ground set exceeds 63 elements");
  }
  const EdgeSet full = EdgeSet::complete(v);
  for (int s = 0; s < edge_count_; ++s) slot_edges_.push_back(full.edge_at(s));
}

int ExtensionMatroid::rank(std::uint64_t subset) const {
  const std::uint64_t e_bit = std::uint64_t{1} << edge_count_;
  const std::uint64_t edges = subset & (e_bit - 1);
  const int v = scale().vertex_count();
  std::vector<int> parent;
  const int r = edge_word_rank(edges, slot_edges_, v, parent);
  if ((subset & e_bit) == 0) return r;
  // Components of the edge part name its closure.
  std::vector<int> labels(v);
  for (int x = 1; x <= v; ++x) {
    int root = x;
    while (parent[root] != root) root = parent[root];
    labels[x - 1] = root;
  }
  return cut_.contains(VertexPartition::from_labels(labels)) ? r : r + 1;
}

std::vector<std::uint8_t> ExtensionMatroid::rank_table() const {
  if (ground_size() > 20) {
    throw ResourceLimitError("rank table needs at most 20 ground elements");
  }
  std::vector<std::uint8_t> table(std::size_t{1} << ground_size());
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    table[a] = static_cast<std::uint8_t>(rank(a));
  }
  return table;
}

VerificationReport verify_matroid_axioms(const RankOracle& rank,
                                         int ground_size) {
  if (ground_size < 0 || ground_size > 16) {
    throw ResourceLimitError("axiom sweep is capped at 16 ground elements");
  }
  VerificationReport report("matroid-axioms");
  const std::uint64_t subsets = std::uint64_t{1} << ground_size;
  std::vector<int> r(subsets);
  for (std::uint64_t a = 0; a < subsets; ++a) r[a] = rank(a);
  auto hex = [](std::uint64_t a) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%llx", static_cast<unsigned long long>(a));
    return std::string(buf);
  };
  for (std::uint64_t a = 0; a < subsets; ++a) {
    ++report.cases_checked;
    if (r[a] < 0 || r[a] > std::popcount(a)) {
      report.fail("r(" + hex(a) + ") = " + std::to_string(r[a]) +
                  " outside [0, |A|]");
    }
    for (int x = 0; x < ground_size; ++x) {
      const std::uint64_t bx = std::uint64_t{1} << x;
      if (a & bx) continue;
      if (r[a | bx] < r[a]) {
        report.fail("monotonicity: r(" + hex(a | bx) + ") < r(" + hex(a) + ")");
      }
      for (int y = x + 1; y < ground_size; ++y) {
        const std::uint64_t by = std::uint64_t{1} << y;
        if (a & by) continue;
        if (r[a | bx | by] + r[a] > r[a | bx] + r[a | by]) {
          report.fail("submodularity: A = " + hex(a | bx) + ", B = " +
                      hex(a | by) + " give r(A u B) + r(A n B) = " +
                      std::to_string(r[a | bx | by] + r[a]) + " > " +
                      std::to_string(r[a | bx] + r[a | by]));
        }
      }
    }
  }
  return report;
}

DeletionCheck deletion_check(const ExtensionMatroid& x) {
  DeletionCheck out;
  out.report.name = "deletion";
  const int v = x.scale().vertex_count();
  const std::uint64_t edge_subsets = std::uint64_t{1} << x.edge_count();
  for (std::uint64_t a = 0; a < edge_subsets; ++a) {
    ++out.report.cases_checked;
    EdgeSet edges(v);
    for (std::uint64_t rest = a; rest != 0; rest &= rest - 1) {
      edges.insert_slot(std::countr_zero(rest));
    }
    const int expected = clique_ext::rank(edges);
    const int got = x.rank(a);
    if (got != expected) {
      out.report.fail("N\\e differs from M on " + edges.to_string() + ": " +
                      std::to_string(got) + " vs " + std::to_string(expected));
    }
  }
  const std::uint64_t e_bit = std::uint64_t{1} << x.new_element();
  const std::uint64_t all_edges = e_bit - 1;
  if (x.rank(e_bit) == 0) {
    out.e_class = ElementClass::kLoop;
  } else if (x.rank(all_edges | e_bit) == x.rank(all_edges) + 1) {
    out.e_class = ElementClass::kColoop;
  } else {
    out.e_class = ElementClass::kOrdinary;
  }
  return out;
}

std::vector<std::pair<int, int>> parallel_edges(const ExtensionMatroid& x) {
  std::vector<std::pair<int, int>> out;
  const std::uint64_t e_bit = std::uint64_t{1} << x.new_element();
  if (x.rank(e_bit) != 1) return out;
  const EdgeSet full = EdgeSet::complete(x.scale().vertex_count());
  for (int s = 0; s < x.edge_count(); ++s) {
    if (x.rank(e_bit | (std::uint64_t{1} << s)) == 1) {
      out.push_back(full.edge_at(s));
    }
  }
  return out;
}

std::uint64_t rank_table_hash(std::span<const std::uint8_t> table) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t byte : table) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ExtensionEnumeration enumerate_extensions(GroundScale n,
                                          const RunOptions& options) {
  if (n.vertex_count() > (options.force ? 6 : 5)) {
    throw ResourceLimitError(
        "extension enumeration is capped at n+1 <= 5 (n+1 <= 6 with "
        "--force); got n+1 = " + std::to_string(n.vertex_count()));
  }
  ExtensionEnumeration out{n, {}, count_linear(n, options), {}};
  out.report.name = "extensions";

  std::vector<SetFamily> families;
  enumerate_linear(n, [&](const SetFamily& b) { families.push_back(b); },
                   options);

  struct Built {
    std::optional<ExtensionRecord> record;
    std::vector<std::uint8_t> table;
    VerificationReport report;
  };
  std::vector<Built> built(families.size());
  internal::parallel_for(families.size(), options.threads, [&](std::size_t i) {
    Built& slot = built[i];
    const SetFamily& b = families[i];
    const LinearSubclass h = subclass_from_family(b);
    ModularCut cut = generate_modular_cut(h);

    VerificationReport cut_report = check_modular_cut(cut);
    cut_report.name = "cut of " + b.to_string();
    slot.report.absorb(cut_report);
    ++slot.report.cases_checked;
    std::vector<SubsetWord> expected(b.members().begin(), b.members().end());
    if (cut.hyperplane_images() != expected) {
      slot.report.fail("cut of " + b.to_string() +
                       " does not restrict to its linear subclass");
    }

    ExtensionMatroid matroid(std::move(cut));
    slot.table = matroid.rank_table();
    const auto& table = slot.table;
    VerificationReport axioms = verify_matroid_axioms(
        [&table](std::uint64_t a) { return static_cast<int>(table[a]); },
        matroid.ground_size());
    axioms.name = "axioms of " + b.to_string();
    slot.report.absorb(axioms);

    DeletionCheck deletion = deletion_check(matroid);
    deletion.report.name = "deletion of " + b.to_string();
    slot.report.absorb(deletion.report);
    ++slot.report.cases_checked;
    if (deletion.e_class == ElementClass::kColoop) {
      slot.report.fail("e is a coloop in the extension of " + b.to_string());
    }
    const std::uint64_t hash = rank_table_hash(table);
    slot.record = ExtensionRecord{b, std::move(matroid), deletion.e_class,
                                  hash};
  });

  std::set<std::vector<std::uint8_t>> distinct;
  for (auto& slot : built) {
    out.report.absorb(slot.report);
    ++out.report.cases_checked;
    if (!distinct.insert(slot.table).second) {
      out.report.fail("extension of " + slot.record->family.to_string() +
                      " repeats an earlier rank table");
    }
    out.extensions.push_back(std::move(*slot.record));
  }
  ++out.report.cases_checked;
  if (BigInt(out.extensions.size()) != out.expected_count) {
    out.report.fail(std::to_string(out.extensions.size()) +
                    " extensions but count_linear = " +
                    out.expected_count.str());
  }
  return out;
}

namespace {

nlohmann::json record_json(const ExtensionRecord& record) {
  nlohmann::json cut = nlohmann::json::array();
  for (const auto& f : record.matroid.cut().flats()) {
    cut.push_back(f.to_string());
  }
  char hash[17];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(record.rank_table_hash));
  return nlohmann::json{{"scale", record.matroid.scale().n()},
                        {"cut", std::move(cut)},
                        {"e_class", std::string(to_string(record.e_class))},
                        {"rank_table_hash", hash}};
}

}  // namespace

std::string extension_json(const ExtensionRecord& record) {
  return record_json(record).dump();
}

std::string extensions_json(const ExtensionEnumeration& all) {
  nlohmann::json doc;
  doc["scale"] = all.scale.n();
  doc["vertices"] = all.scale.vertex_count();
  doc["count"] = std::to_string(all.extensions.size());
  doc["count_linear"] = all.expected_count.str();
  doc["verified"] = all.report.passed();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : all.extensions) {
    nlohmann::json item = record_json(r);
    item["family"] = family_line(r.family);
    list.push_back(std::move(item));
  }
  doc["extensions"] = std::move(list);
  return doc.dump(2) + "\n";
}

VerificationReport verify_subclass_correspondence(GroundScale n,
                                                  const RunOptions& options) {
  if (n.n() > 4) {
    throw ResourceLimitError(
        "subclass correspondence sweep is capped at n <= 4");
  }
  VerificationReport report("subclass-correspondence");
  const int universe = (1 << n.n()) - 1;
  const std::uint64_t total = std::uint64_t{1} << universe;
  const std::uint64_t chunk = std::min<std::uint64_t>(total, 1U << 8);
  const std::size_t chunks = static_cast<std::size_t>(total / chunk);
  std::vector<VerificationReport> parts(chunks);
  internal::parallel_for(chunks, options.threads, [&](std::size_t c) {
    DeadlineProbe probe(options, "subclass correspondence");
    VerificationReport& part = parts[c];
    for (std::uint64_t m = c * chunk; m < (c + 1) * chunk; ++m) {
      probe.tick();
      ++part.cases_checked;
      const SetFamily b = SetFamily::from_membership_mask(n, m << 1);
      const std::vector<Hyperplane> hs = hyperplane_image(b);
      const bool linear = is_linear(b);
      const bool closed = !linear_subclass_violation(n, hs);
      if (linear != closed) {
        part.fail("family " + b.to_string() +
                  (linear ? " is linear but its hyperplanes are not a "
                            "linear subclass"
                          : " is not linear but its hyperplanes form a "
                            "linear subclass"));
        continue;
      }
      if (!linear && n.n() > 3) continue;
      // The generated cut always holds the whole edge set, so the closure is
      // seeded with it too.
      std::vector<VertexPartition> seeds{
          VertexPartition::whole(n.vertex_count())};
      for (const auto& h : hs) seeds.push_back(h.partition);
      const ModularCut closed_cut = modular_cut_closure(n, seeds);
      if (linear) {
        const ModularCut cut =
            generate_modular_cut(LinearSubclass::from_hyperplanes(n, hs));
        if (cut.hyperplane_images() != b.members()) {
          part.fail("cut of " + b.to_string() + " loses hyperplanes");
        }
        if (!(cut == closed_cut)) {
          part.fail("generated cut of " + b.to_string() +
                    " differs from the modular-cut closure");
        }
        if (n.n() <= 3) {
          VerificationReport mc = check_modular_cut(cut);
          if (!mc.passed()) part.fail(*mc.witness);
        }
      } else if (closed_cut.hyperplane_images() == b.members()) {
        part.fail("modular-cut closure of non-linear " + b.to_string() +
                  " adds no hyperplane");
      }
    }
  });
  for (const auto& p : parts) report.absorb(p);
  return report;
}

}  // namespace clique_ext
