#pragma once

#include "qlab/topology.hpp"

namespace qlab {

struct NamedQuantale {
  std::string name;
  QPtr q;
};

// Line-oriented .qnt format; '#' starts a comment. Bottom rows and columns
// of the multiplication table are implied and accepted explicitly.
NamedQuantale parse_quantale_text(const std::string& text, int max_elements = 64);
NamedQuantale load_quantale(const std::string& path_or_catalog, int max_elements = 64);
std::string export_quantale(const std::string& name, const Quantale& q);
// adds a comment block factoring every element into elementary tensors
std::string export_tensor_quantale(const std::string& name, const TensorQuantale& t);
std::string export_quotient_quantale(const std::string& name, const QuotientQuantale& quot);

std::string export_topology(const QTopology& t, const std::string& ambient_name);

struct PushoutSpec {
  std::string name;
  QPtr left, right, part;
  SupMap q_left, q_right, theta_left, theta_right;
};
PushoutSpec parse_pushout_spec(const std::string& text, int max_elements = 64);
PushoutSpec load_pushout_spec(const std::string& path, int max_elements = 64);

struct CoequalizerSpec {
  std::string name;
  QPtr source, target;
  std::vector<Idx> f, g;
};
CoequalizerSpec parse_coequalizer_spec(const std::string& text, int max_elements = 64);
CoequalizerSpec load_coequalizer_spec(const std::string& path, int max_elements = 64);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qlab
