#include "slotmarket/bmatch.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace slotmarket {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct FlowEdge {
  int to;
  int cap;
  long long cost;
  int rev;  // index of the reverse edge in graph[to]
};

struct FlowNetwork {
  std::vector<std::vector<FlowEdge>> graph;

  explicit FlowNetwork(int n) : graph(n) {}

  void add_edge(int from, int to, int cap, long long cost) {
    graph[from].push_back({to, cap, cost, static_cast<int>(graph[to].size())});
    graph[to].push_back({from, 0, -cost, static_cast<int>(graph[from].size()) - 1});
  }
};

}  // namespace

int MatchGraph::slot_index(const SlotId& id) const {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] == id) return static_cast<int>(i);
  }
  return -1;
}

int MatchGraph::flight_index(const FlightId& id) const {
  for (std::size_t i = 0; i < flights.size(); ++i) {
    if (flights[i] == id) return static_cast<int>(i);
  }
  return -1;
}

int MatchGraph::dummy_edge_classes() const {
  int n = 0;
  for (int c : slot_capacity) {
    if (c > 0) ++n;
  }
  return n;
}

MatchGraph build_match_graph(const Instance& inst) {
  MatchGraph g;

  std::vector<const Slot*> slot_order;
  slot_order.reserve(inst.slots.size());
  for (const auto& s : inst.slots) slot_order.push_back(&s);
  std::sort(slot_order.begin(), slot_order.end(), [](const Slot* a, const Slot* b) {
    return std::tie(a->time_index, a->id) < std::tie(b->time_index, b->id);
  });

  std::map<SlotId, int> slot_idx;
  for (const Slot* s : slot_order) {
    slot_idx[s->id] = static_cast<int>(g.slots.size());
    g.slots.push_back(s->id);
    g.slot_capacity.push_back(s->capacity);
    g.slot_time_index.push_back(s->time_index);
  }

  std::vector<const Flight*> flight_order;
  flight_order.reserve(inst.flights.size());
  for (const auto& f : inst.flights) flight_order.push_back(&f);
  std::sort(flight_order.begin(), flight_order.end(),
            [](const Flight* a, const Flight* b) { return a->id < b->id; });

  for (const Flight* f : flight_order) {
    g.flights.push_back(f->id);
    std::vector<std::pair<int, Cost>> edges;
    for (const auto& [s, c] : f->delay_cost) {
      edges.emplace_back(slot_idx.at(s), c);
    }
    std::sort(edges.begin(), edges.end());
    g.flight_edges.push_back(std::move(edges));
  }

  g.dummy_b = inst.total_capacity() - static_cast<long long>(inst.flights.size());
  if (g.dummy_b < 0) {
    throw InfeasibleError("total capacity " + std::to_string(inst.total_capacity()) +
                          " < " + std::to_string(inst.flights.size()) + " flights");
  }
  return g;
}

BMatchResult solve_min_bmatching(const MatchGraph& g) {
  const int num_flights = static_cast<int>(g.flights.size());
  const int num_slots = static_cast<int>(g.slots.size());
  const int source = 0;
  const int flight_base = 1;
  const int slot_base = 1 + num_flights;
  const int sink = slot_base + num_slots;
  const int n = sink + 1;

  FlowNetwork net(n);
  for (int f = 0; f < num_flights; ++f) {
    net.add_edge(source, flight_base + f, 1, 0);
  }
  // Remember where each flight's slot edges start for schedule extraction.
  std::vector<std::size_t> flight_edge_begin(num_flights);
  for (int f = 0; f < num_flights; ++f) {
    flight_edge_begin[f] = net.graph[flight_base + f].size();
    for (const auto& [s, c] : g.flight_edges[f]) {
      net.add_edge(flight_base + f, slot_base + s, 1, c);
    }
  }
  for (int s = 0; s < num_slots; ++s) {
    if (g.slot_capacity[s] > 0) {
      net.add_edge(slot_base + s, sink, g.slot_capacity[s], 0);
    }
  }

  std::vector<long long> potential(n, 0);
  std::vector<long long> dist(n);
  std::vector<int> prev_node(n), prev_edge(n);

  for (int unit = 0; unit < num_flights; ++unit) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[source] = 0;
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.emplace(0, source);
    std::vector<char> settled(n, 0);
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (settled[u]) continue;
      settled[u] = 1;
      if (u == sink) break;
      for (std::size_t e = 0; e < net.graph[u].size(); ++e) {
        const FlowEdge& edge = net.graph[u][e];
        if (edge.cap <= 0) continue;
        long long nd = d + edge.cost + potential[u] - potential[edge.to];
        if (nd < dist[edge.to]) {
          dist[edge.to] = nd;
          prev_node[edge.to] = u;
          prev_edge[edge.to] = static_cast<int>(e);
          pq.emplace(nd, edge.to);
        }
      }
    }
    if (dist[sink] >= kInf) {
      // Some flight cannot be saturated; name one still lacking a slot.
      for (int f = 0; f < num_flights; ++f) {
        if (net.graph[source][f].cap > 0) {
          throw InfeasibleError("no feasible schedule: flight " + g.flights[f] +
                                " cannot be assigned (capacity exhausted in its window)");
        }
      }
      throw InfeasibleError("no feasible schedule");
    }
    for (int v = 0; v < n; ++v) {
      potential[v] += std::min(dist[v], dist[sink]);
    }
    // Augment one unit along the shortest path.
    for (int v = sink; v != source; v = prev_node[v]) {
      FlowEdge& edge = net.graph[prev_node[v]][prev_edge[v]];
      edge.cap -= 1;
      net.graph[v][edge.rev].cap += 1;
    }
  }

  BMatchResult result;
  for (int f = 0; f < num_flights; ++f) {
    const std::size_t begin = flight_edge_begin[f];
    for (std::size_t k = 0; k < g.flight_edges[f].size(); ++k) {
      const FlowEdge& edge = net.graph[flight_base + f][begin + k];
      if (edge.cap == 0) {  // unit edge fully used
        const auto& [s, c] = g.flight_edges[f][k];
        result.schedule.assignment[g.flights[f]] = g.slots[s];
        result.objective += c;
        break;
      }
    }
  }

  // Slot prices from potentials: p_s = π(sink) − π(s), clamped at zero for
  // slots carrying no flight (their potential is unconstrained from below).
  std::vector<Cost> price(num_slots, 0);
  for (int s = 0; s < num_slots; ++s) {
    price[s] = std::max<long long>(0, potential[sink] - potential[slot_base + s]);
  }

  for (int s = 0; s < num_slots; ++s) {
    result.duals.slot[g.slots[s]] = -price[s];
  }
  result.duals.dummy = 1;
  for (int f = 0; f < num_flights; ++f) {
    const SlotId& assigned = result.schedule.assignment.at(g.flights[f]);
    Cost c = 0;
    for (const auto& [s, cost] : g.flight_edges[f]) {
      if (g.slots[s] == assigned) {
        c = cost;
        break;
      }
    }
    result.duals.flight[g.flights[f]] = price[g.slot_index(assigned)] + c;
  }
  return result;
}

BMatchResult solve_min_bmatching(const Instance& inst) {
  return solve_min_bmatching(build_match_graph(inst));
}

}  // namespace slotmarket
