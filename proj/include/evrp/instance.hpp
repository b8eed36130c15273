#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace evrp {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline double euclid(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

enum class NodeRole : std::uint8_t { Depot, Customer, Station };

// Node handle: a role plus a 0-based index within that role. The depot index
// is always 0.
struct NodeId {
  NodeRole role = NodeRole::Depot;
  int index = 0;

  static NodeId depot() { return {NodeRole::Depot, 0}; }
  static NodeId customer(int i) { return {NodeRole::Customer, i}; }
  static NodeId station(int j) { return {NodeRole::Station, j}; }

  bool is_depot() const { return role == NodeRole::Depot; }
  bool is_customer() const { return role == NodeRole::Customer; }
  bool is_station() const { return role == NodeRole::Station; }

  friend bool operator==(const NodeId&, const NodeId&) = default;
};

struct Customer {
  Point pos;
  double demand = 0.0;
  friend bool operator==(const Customer&, const Customer&) = default;
};

// A problem instance on a weighted complete graph: one depot, customers with
// demands, charging stations, and the vehicle parameters. Distances are
// Euclidean, computed from the stored coordinates at full double precision.
struct Instance {
  std::string name;
  Point depot;
  std::vector<Customer> customers;
  std::vector<Point> stations;
  double cargo_capacity = 0.0;    // Q
  double battery_capacity = 0.0;  // B
  double consumption_rate = 0.0;  // h, energy per unit distance

  int num_customers() const { return static_cast<int>(customers.size()); }
  int num_stations() const { return static_cast<int>(stations.size()); }

  Point position(NodeId v) const {
    switch (v.role) {
      case NodeRole::Depot: return depot;
      case NodeRole::Customer: return customers[v.index].pos;
      case NodeRole::Station: return stations[v.index];
    }
    return depot;
  }

  // 0 for the depot and for stations.
  double demand_of(NodeId v) const {
    return v.role == NodeRole::Customer ? customers[v.index].demand : 0.0;
  }

  double distance(NodeId a, NodeId b) const { return euclid(position(a), position(b)); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Structural sanity check: positive Q/B/h, nonnegative demands, finite
// coordinates. Returns an empty string when fine, otherwise a description.
std::string check_instance(const Instance& inst);

// A customer visiting order; valid when it is a bijection on 0..n-1.
struct Permutation {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

bool is_valid_permutation(const Permutation& p, int n);

}  // namespace evrp
