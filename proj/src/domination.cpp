#include "coalition/domination.hpp"

#include <array>
#include <sstream>

namespace coalition {

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ';';
    bool first = true;
    for (int v : parts[i]) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    VertexSet s;
    std::stringstream members(part);
    std::string item;
    while (std::getline(members, item, ',')) {
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw GraphError("partition: '" + item + "' is not a vertex index");
      }
      if (used != item.size() || v < 0 || v >= VertexSet::kCapacity) {
        throw GraphError("partition: '" + item + "' is not a vertex index");
      }
      s.insert(v);
    }
    p.parts.push_back(s);
  }
  return p;
}

void check_partition(const Graph& g, const Partition& p) {
  VertexSet covered;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const VertexSet part = p.parts[i];
    if (part.empty()) throw GraphError("partition: part " + std::to_string(i) + " is empty");
    if (!part.subset_of(g.vertices())) {
      throw GraphError("partition: part " + std::to_string(i) + " names a vertex outside the graph");
    }
    if (part.intersects(covered)) {
      throw GraphError("partition: part " + std::to_string(i) + " overlaps an earlier part");
    }
    covered |= part;
  }
  if (covered != g.vertices()) {
    throw GraphError("partition: vertices " + (g.vertices() - covered).to_string() +
                     " are not covered");
  }
}

Partition singleton_partition(const Graph& g) {
  Partition p;
  for (int v = 0; v < g.order(); ++v) p.parts.push_back(VertexSet::single(v));
  return p;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out = s;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

bool is_dominating(const Graph& g, VertexSet s) {
  return closed_neighborhood(g, s) == g.vertices();
}

bool forms_coalition(const Graph& g, VertexSet a, VertexSet b) {
  if (a.empty() || b.empty()) throw GraphError("forms_coalition: empty side");
  if (a.intersects(b)) throw GraphError("forms_coalition: sides overlap");
  return !is_dominating(g, a) && !is_dominating(g, b) && is_dominating(g, a | b);
}

PartitionVerdict is_coalition_partition(const Graph& g, const Partition& p) {
  check_partition(g, p);
  const int k = p.size();
  std::vector<VertexSet> reach(k);
  std::vector<bool> dominating(k);
  for (int i = 0; i < k; ++i) {
    reach[i] = closed_neighborhood(g, p.parts[i]);
    dominating[i] = reach[i] == g.vertices();
  }

  PartitionVerdict verdict;
  verdict.valid = true;
  for (int i = 0; i < k; ++i) {
    PartVerdict pv;
    pv.part = i;
    if (dominating[i]) {
      if (p.parts[i].size() == 1) {
        pv.status = PartStatus::kSingletonDominating;
      } else {
        pv.status = PartStatus::kInvalid;
        pv.reason = "dominating set with more than one vertex";
      }
    } else {
      for (int j = 0; j < k; ++j) {
        if (j != i && !dominating[j] && (reach[i] | reach[j]) == g.vertices()) {
          pv.status = PartStatus::kCoalition;
          pv.partner = j;
          break;
        }
      }
      if (pv.status == PartStatus::kInvalid) pv.reason = "no coalition partner among the parts";
    }
    if (pv.status == PartStatus::kInvalid) verdict.valid = false;
    verdict.per_part.push_back(pv);
  }
  return verdict;
}

SpVerdict sp_check(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  SpVerdict verdict;
  verdict.partner.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (g.closed_neighbors(v) == all) verdict.full_vertices.insert(v);
  }
  // Two non-full singletons form a coalition iff their closed
  // neighborhoods cover V.
  const VertexSet candidates = all - verdict.full_vertices;
  for (int v : candidates) {
    for (int u : candidates) {
      if (u != v && (g.closed_neighbors(v) | g.closed_neighbors(u)) == all) {
        verdict.partner[v] = u;
        break;
      }
    }
    if (verdict.partner[v] < 0) {
      verdict.blocking_vertex = v;
      verdict.partner.assign(n, -1);
      return verdict;
    }
  }
  verdict.is_sp = true;
  return verdict;
}

namespace {

// Restricted-growth-string search for a valid coalition partition with
// exactly `target` parts. block[v] is the part of vertex v.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, int target) : g_(g), n_(g.order()), target_(target) {}

  std::optional<Partition> run() {
    block_.fill(0);
    if (assign(0, 0)) return to_partition();
    return std::nullopt;
  }

 private:
  bool assign(int v, int used) {
    if (used + (n_ - v) < target_) return false;
    if (v == n_) return used == target_ && valid();
    for (int b = 0; b <= used && b < target_; ++b) {
      block_[v] = b;
      if (assign(v + 1, b == used ? used + 1 : used)) return true;
    }
    return false;
  }

  bool valid() const { return is_coalition_partition(g_, to_partition()).valid; }

  Partition to_partition() const {
    Partition p;
    p.parts.assign(target_, VertexSet());
    for (int v = 0; v < n_; ++v) p.parts[block_[v]].insert(v);
    return p;
  }

  const Graph& g_;
  const int n_;
  const int target_;
  std::array<int, kMaxOrder> block_{};
};

void check_search_order(const Graph& g) {
  if (g.order() > kMaxCoalitionSearchOrder) {
    throw GraphError("coalition number: order " + std::to_string(g.order()) +
                     " exceeds search cap " + std::to_string(kMaxCoalitionSearchOrder));
  }
}

CoalitionNumberResult search_from(const Graph& g, int top) {
  for (int target = top; target >= 1; --target) {
    if (auto witness = PartitionSearch(g, target).run()) return {target, std::move(witness)};
  }
  return {0, std::nullopt};
}

}  // namespace

CoalitionNumberResult coalition_number_exact(const Graph& g) {
  check_search_order(g);
  if (sp_check(g).is_sp) return {g.order(), singleton_partition(g)};
  return search_from(g, g.order() - 1);
}

CoalitionNumberResult coalition_number_search(const Graph& g) {
  check_search_order(g);
  return search_from(g, g.order());
}

}  // namespace coalition
