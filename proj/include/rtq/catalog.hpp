#pragma once

#include <string>
#include <vector>

#include "rtq/tree.hpp"

namespace rtq {

/// Builds a named diagram. Families and parameters:
///   A n           Dynkin chain, n >= 1
///   D n           Dynkin fork, n >= 3
///   E6 | E7 | E8  exceptional Dynkin diagrams
///   A_nmk n m k   weight-3 star with chain arms of lengths n, m, k (>= 0)
///   B_mn m n      chain arm of length m >= 0 glued to a D_{n+1} fork, n >= 2
///   C_mn m n      chain arm of length n >= 1 glued to a D_m tail, m >= 2
///   D_n5 n        chain arm of length n >= 0 glued to a D_5 short tail
///   F_n n         chain arm of length n >= 0 glued to an E_6 arm
///   H_n n         chain of n-1 vertices with the weight-3 vertex on E3, n >= 5
///   E71 E81 E82   exceptional shapes with one weight-3 end vertex
///   A_kt k t      connector chain between two weight-3 ends with a third
///                 heavy vertex of weight max(3, k+1) on the plateau; k >= 1,
///                 t >= 3
///   quasi w1 w2 w3  the composite quasi-determinantal tree built from an
///                 A_{2,4} connector, a D_5 short tail and an E_6 arm;
///                 requires w1 >= 3, w2 >= 4, w3 >= 5
///
/// The weight-3 vertex of triple diagrams always has id 0. Vertex labels
/// follow the customary figure names.
WeightedTree catalog_tree(const std::string& name, const std::vector<int>& params);

/// All family names accepted by catalog_tree.
std::vector<std::string> catalog_families();

/// True when the tree has exactly one vertex of weight >= 3 and its weight is 3.
bool is_triple_tree(const WeightedTree& t);

}  // namespace rtq
