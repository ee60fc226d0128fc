#include "qlab/format.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace qlab {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// "key: rest" split; returns false when the line carries no key
bool key_of(const std::string& line, std::string& key, std::string& rest) {
  auto pos = line.find(':');
  if (pos == std::string::npos) return false;
  key = line.substr(0, pos);
  while (!key.empty() && key.back() == ' ') key.pop_back();
  rest = line.substr(pos + 1);
  return true;
}

std::vector<std::pair<std::string, std::string>> parse_arrows(const std::string& rest,
                                                              const char* what) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& tok : tokens(rest)) {
    auto pos = tok.find("->");
    if (pos == std::string::npos)
      fail(ErrorKind::ParseError, std::string(what) + ": expected 'a->b', got '" + tok + "'");
    out.emplace_back(tok.substr(0, pos), tok.substr(pos + 2));
  }
  return out;
}

std::vector<std::string> clean_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (tokens(line).empty()) continue;
    out.push_back(line);
  }
  return out;
}

SupMap map_from_arrows(LatPtr dom, LatPtr cod, const std::string& rest, const char* what) {
  auto arrows = parse_arrows(rest, what);
  std::vector<Idx> t(dom->size(), -1);
  for (auto& [a, b] : arrows) t[dom->index_of(a)] = cod->index_of(b);
  for (int i = 0; i < dom->size(); ++i)
    if (t[i] < 0)
      fail(ErrorKind::ParseError,
           std::string(what) + ": no image for '" + dom->names[i] + "'");
  return validate_supmap(std::move(dom), std::move(cod), std::move(t));
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << content;
}

NamedQuantale parse_quantale_text(const std::string& text, int max_elements) {
  auto lines = clean_lines(text);
  if (lines.empty()) fail(ErrorKind::ParseError, "empty quantale file");
  auto head = tokens(lines[0]);
  if (head.size() != 2 || head[0] != "quantale")
    fail(ErrorKind::ParseError, "expected header 'quantale <name>'");
  NamedQuantale out;
  out.name = head[1];

  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::string, std::vector<std::string>> mult_rows;
  std::vector<std::string> row_order;
  std::optional<std::string> unit;
  std::vector<std::pair<std::string, std::string>> invol;
  bool invol_given = false;

  for (size_t i = 1; i < lines.size(); ++i) {
    std::string key, rest;
    if (!key_of(lines[i], key, rest))
      fail(ErrorKind::ParseError, "expected 'key: ...' at line: " + lines[i]);
    if (key == "elements") {
      elements = tokens(rest);
    } else if (key == "order") {
      for (auto& tok : tokens(rest)) {
        auto pos = tok.find('<');
        if (pos == std::string::npos)
          fail(ErrorKind::ParseError, "order: expected 'a<b', got '" + tok + "'");
        order.emplace_back(tok.substr(0, pos), tok.substr(pos + 1));
      }
    } else if (key == "mult") {
      std::string row, values;
      if (!key_of(rest, row, values))
        fail(ErrorKind::ParseError, "mult: expected 'mult: <row>: v1 v2 ...'");
      for (auto& t : tokens(row))
        row = t;  // trim
      if (mult_rows.count(row)) fail(ErrorKind::ParseError, "duplicate mult row '" + row + "'");
      mult_rows[row] = tokens(values);
      row_order.push_back(row);
    } else if (key == "unit") {
      auto t = tokens(rest);
      if (t.size() != 1) fail(ErrorKind::ParseError, "unit: expected one token");
      if (t[0] != "none") unit = t[0];
    } else if (key == "involution") {
      auto t = tokens(rest);
      if (!(t.size() == 1 && t[0] == "none")) {
        invol = parse_arrows(rest, "involution");
        invol_given = true;
      }
    } else {
      fail(ErrorKind::ParseError, "unknown key '" + key + "'");
    }
  }
  if (elements.empty()) fail(ErrorKind::ParseError, "missing 'elements:' line");
  if (static_cast<int>(elements.size()) > max_elements)
    fail(ErrorKind::SizeCapExceeded, "carrier exceeds the element cap");

  LatPtr lat = validate_lattice(elements, order);
  const int n = lat->size();
  std::vector<std::string> cols;
  for (auto& e : elements)
    if (lat->index_of(e) != lat->bottom) cols.push_back(e);

  std::vector<Idx> mult(static_cast<size_t>(n) * n, lat->bottom);
  for (auto& row : row_order) {
    Idx r = lat->index_of(row);
    auto& vals = mult_rows[row];
    bool with_bottom_col = vals.size() == elements.size();
    if (!with_bottom_col && vals.size() != cols.size())
      fail(ErrorKind::ParseError, "mult row '" + row + "' has " +
                                      std::to_string(vals.size()) + " values, expected " +
                                      std::to_string(cols.size()));
    const auto& colnames = with_bottom_col ? elements : cols;
    for (size_t j = 0; j < colnames.size(); ++j) {
      Idx c = lat->index_of(colnames[j]);
      Idx v = lat->index_of(vals[j]);
      if (c == lat->bottom && v != lat->bottom)
        fail(ErrorKind::ParseError, "bottom column of row '" + row + "' must be bottom");
      mult[static_cast<size_t>(r) * n + c] = v;
    }
  }
  for (auto& [row, vals] : mult_rows) {
    Idx r = lat->index_of(row);
    if (r == lat->bottom)
      for (auto& v : vals)
        if (lat->index_of(v) != lat->bottom)
          fail(ErrorKind::ParseError, "explicit bottom row must be constant bottom");
  }

  std::optional<Idx> unit_idx;
  if (unit) unit_idx = lat->index_of(*unit);
  std::optional<std::vector<Idx>> invol_tab;
  if (invol_given) {
    std::vector<Idx> t(n, -1);
    for (auto& [a, b] : invol) t[lat->index_of(a)] = lat->index_of(b);
    for (int i = 0; i < n; ++i)
      if (t[i] < 0)
        fail(ErrorKind::ParseError, "involution misses '" + lat->names[i] + "'");
    invol_tab = std::move(t);
  }
  out.q = validate_quantale(lat, std::move(mult), unit_idx, std::move(invol_tab));
  return out;
}

NamedQuantale load_quantale(const std::string& path_or_catalog, int max_elements) {
  const std::string prefix = "catalog:";
  if (path_or_catalog.rfind(prefix, 0) == 0) {
    std::string name = path_or_catalog.substr(prefix.size());
    return {name, catalog(name)};
  }
  return parse_quantale_text(read_file(path_or_catalog), max_elements);
}

std::string export_quantale(const std::string& name, const Quantale& q) {
  std::ostringstream out;
  out << "quantale " << name << "\n";
  out << "elements:";
  for (auto& e : q.lat->names) out << " " << e;
  out << "\n";
  out << "order:";
  for (auto& [a, b] : q.lat->hasse_edges()) out << " " << q.name(a) << "<" << q.name(b);
  out << "\n";
  for (int r = 0; r < q.size(); ++r) {
    if (r == q.bottom()) continue;
    out << "mult: " << q.name(r) << ":";
    for (int c = 0; c < q.size(); ++c) {
      if (c == q.bottom()) continue;
      out << " " << q.name(q.mult(r, c));
    }
    out << "\n";
  }
  out << "unit: " << (q.unit ? q.name(*q.unit) : std::string("none")) << "\n";
  out << "involution:";
  if (q.involutive()) {
    for (int a = 0; a < q.size(); ++a) out << " " << q.name(a) << "->" << q.name(q.inv(a));
  } else {
    out << " none";
  }
  out << "\n";
  return out.str();
}

std::string export_tensor_quantale(const std::string& name, const TensorQuantale& t) {
  std::ostringstream out;
  out << export_quantale(name, *t.product);
  out << "# factorization into elementary tensors\n";
  for (int i = 0; i < t.product->size(); ++i) {
    out << "# " << t.product->name(i) << " =";
    auto fac = t.factorization(i);
    bool first = true;
    for (auto& [a, b] : fac) {
      out << (first ? " " : " + ") << t.left->name(a) << "(x)" << t.right->name(b);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string export_quotient_quantale(const std::string& name, const QuotientQuantale& quot) {
  std::ostringstream out;
  out << export_quantale(name, *quot.quotient);
  out << "# quotient of a " << quot.source->size() << "-element quantale\n";
  out << "# nucleus fixed points:";
  for (Idx s : quot.nucleus.fixed) out << " " << quot.source->name(s);
  out << "\n";
  return out.str();
}

std::string export_topology(const QTopology& t, const std::string& ambient_name) {
  std::ostringstream out;
  out << "topology\n";
  out << "points:";
  for (auto& p : t.points) out << " " << p;
  out << "\n";
  out << "ambient: " << ambient_name << "\n";
  out << "involutive: " << (t.involutive ? "yes" : "no") << "\n";
  for (auto& f : t.opens) {
    out << "open:";
    for (Idx v : f) out << " " << t.ambient->name(v);
    out << "\n";
  }
  return out.str();
}

namespace {

QPtr load_ref(const std::string& token, int max_elements) {
  return load_quantale(token, max_elements).q;
}

}  // namespace

PushoutSpec parse_pushout_spec(const std::string& text, int max_elements) {
  auto lines = clean_lines(text);
  if (lines.empty()) fail(ErrorKind::ParseError, "empty pushout spec");
  auto head = tokens(lines[0]);
  if (head.size() != 2 || head[0] != "pushout")
    fail(ErrorKind::ParseError, "expected header 'pushout <name>'");
  std::map<std::string, std::string> kv;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::string key, rest;
    if (!key_of(lines[i], key, rest))
      fail(ErrorKind::ParseError, "expected 'key: ...' at line: " + lines[i]);
    kv[key] = rest;
  }
  for (const char* k : {"left", "right", "part", "q_left", "q_right", "theta_left",
                        "theta_right"})
    if (!kv.count(k)) fail(ErrorKind::ParseError, std::string("missing '") + k + ":' line");
  PushoutSpec spec;
  spec.name = head[1];
  spec.left = load_ref(tokens(kv["left"]).at(0), max_elements);
  spec.right = load_ref(tokens(kv["right"]).at(0), max_elements);
  spec.part = load_ref(tokens(kv["part"]).at(0), max_elements);
  spec.q_left = map_from_arrows(spec.part->lat, spec.left->lat, kv["q_left"], "q_left");
  spec.q_right = map_from_arrows(spec.part->lat, spec.right->lat, kv["q_right"], "q_right");
  spec.theta_left =
      map_from_arrows(spec.left->lat, spec.right->lat, kv["theta_left"], "theta_left");
  spec.theta_right =
      map_from_arrows(spec.right->lat, spec.left->lat, kv["theta_right"], "theta_right");
  return spec;
}

PushoutSpec load_pushout_spec(const std::string& path, int max_elements) {
  return parse_pushout_spec(read_file(path), max_elements);
}

CoequalizerSpec parse_coequalizer_spec(const std::string& text, int max_elements) {
  auto lines = clean_lines(text);
  if (lines.empty()) fail(ErrorKind::ParseError, "empty coequalizer spec");
  auto head = tokens(lines[0]);
  if (head.size() != 2 || head[0] != "coequalizer")
    fail(ErrorKind::ParseError, "expected header 'coequalizer <name>'");
  std::map<std::string, std::string> kv;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::string key, rest;
    if (!key_of(lines[i], key, rest))
      fail(ErrorKind::ParseError, "expected 'key: ...' at line: " + lines[i]);
    kv[key] = rest;
  }
  for (const char* k : {"source", "target", "f", "g"})
    if (!kv.count(k)) fail(ErrorKind::ParseError, std::string("missing '") + k + ":' line");
  CoequalizerSpec spec;
  spec.name = head[1];
  spec.source = load_ref(tokens(kv["source"]).at(0), max_elements);
  spec.target = load_ref(tokens(kv["target"]).at(0), max_elements);
  spec.f = map_from_arrows(spec.source->lat, spec.target->lat, kv["f"], "f").table;
  spec.g = map_from_arrows(spec.source->lat, spec.target->lat, kv["g"], "g").table;
  return spec;
}

CoequalizerSpec load_coequalizer_spec(const std::string& path, int max_elements) {
  return parse_coequalizer_spec(read_file(path), max_elements);
}

}  // namespace qlab
