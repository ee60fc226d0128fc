#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "qlab/format.hpp"

using namespace qlab;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Report {
  std::string command;
  std::vector<std::string> lines;
  ordered_json data;
  int exit_code = 0;

  void line(const std::string& s) { lines.push_back(s); }
  int emit(bool as_json) const {
    if (as_json) {
      ordered_json out;
      out["command"] = command;
      out["exit"] = exit_code;
      out["result"] = data;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "command: " << command << "\n";
      for (auto& l : lines) std::cout << l << "\n";
    }
    return exit_code;
  }
};

std::string join_names(const Quantale& q, const std::vector<Idx>& idx) {
  std::string s;
  for (Idx i : idx) {
    if (!s.empty()) s += " ";
    s += q.name(i);
  }
  return s.empty() ? "(none)" : s;
}

std::vector<std::string> name_list(const Quantale& q, const std::vector<Idx>& idx) {
  std::vector<std::string> v;
  for (Idx i : idx) v.push_back(q.name(i));
  return v;
}

void describe_quantale(Report& rep, const NamedQuantale& nq) {
  const Quantale& q = *nq.q;
  rep.line("quantale: " + nq.name + " (" + std::to_string(q.size()) + " elements)");
  rep.data["name"] = nq.name;
  rep.data["elements"] = q.lat->names;

  PropertyReport pr = property_report(q);
  std::string flags;
  ordered_json jflags;
  for (auto& [k, v] : pr.flags) {
    if (!flags.empty()) flags += " ";
    flags += k + "=" + (v ? "yes" : "no");
    jflags[k] = v;
  }
  rep.line("properties: " + flags);
  rep.data["properties"] = jflags;

  auto L = sided_subquantale(nq.q, 'L');
  auto R = sided_subquantale(nq.q, 'R');
  auto I = sided_subquantale(nq.q, 'I');
  rep.line("left-sided: " + join_names(q, L.elements));
  rep.line("right-sided: " + join_names(q, R.elements));
  rep.line("two-sided: " + join_names(q, I.elements));
  rep.data["left_sided"] = name_list(q, L.elements);
  rep.data["right_sided"] = name_list(q, R.elements);
  rep.data["two_sided"] = name_list(q, I.elements);

  rep.line("spectrum: " + join_names(q, spectrum(q)));
  rep.line("strong-spectrum: " + join_names(q, strong_spectrum(q)));
  rep.data["spectrum"] = name_list(q, spectrum(q));
  rep.data["strong_spectrum"] = name_list(q, strong_spectrum(q));
  if (q.involutive()) {
    rep.line("hermitian-spectrum: " + join_names(q, hermitian_spectrum(q)));
    rep.data["hermitian_spectrum"] = name_list(q, hermitian_spectrum(q));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantale-lab: finite quantales and quantale-enriched topologies"};
  app.require_subcommand(1);
  bool as_json = false;
  int max_elements = 64;
  int max_tensor = 4096;
  int max_opens = 20000;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--max-elements", max_elements, "carrier size cap for inputs");
  app.add_option("--max-tensor", max_tensor, "bi-ideal count cap for tensor products");
  app.add_option("--max-opens", max_opens, "open-set cap for generated topologies");

  std::string file, file2, outfile, space = "sigma_s", report_opts, cat_name;

  auto* c_check = app.add_subcommand("check", "validate and report a quantale file");
  c_check->add_option("file", file)->required();

  auto* c_spec = app.add_subcommand("spectrum", "list prime elements");
  bool strong = false, hermitian = false;
  c_spec->add_option("file", file)->required();
  c_spec->add_flag("--strong", strong);
  c_spec->add_flag("--hermitian", hermitian);

  auto* c_inv = app.add_subcommand("involutions", "list all involutions");
  c_inv->add_option("file", file)->required();

  auto* c_tensor = app.add_subcommand("tensor", "tensor product of two quantale files");
  c_tensor->add_option("left", file)->required();
  c_tensor->add_option("right", file2)->required();
  c_tensor->add_option("-o,--out", outfile);

  auto* c_coeq = app.add_subcommand("coequalizer", "coequalizer of a parallel pair");
  c_coeq->add_option("spec", file)->required();
  c_coeq->add_option("-o,--out", outfile);

  auto* c_qf = app.add_subcommand("quantic-frame", "certify the quantic frame conditions");
  c_qf->add_option("file", file)->required();

  auto* c_push = app.add_subcommand("pushout-spectrum", "involutive pushout quotient");
  c_push->add_option("spec", file)->required();
  c_push->add_option("-o,--out", outfile);

  auto* c_topo = app.add_subcommand("topologize", "spectral topologization");
  c_topo->add_option("file", file)->required();
  c_topo->add_option("--space", space, "sigma_s | sigma_h | sigma_l")->required();
  c_topo->add_option("--report", report_opts, "comma list: separation,sober,base");
  c_topo->add_option("-o,--out", outfile);

  auto* c_sq2 = app.add_subcommand("enumerate-sq2", "strictly quantized unital quantales");

  auto* c_cat = app.add_subcommand("catalog", "export a built-in quantale");
  c_cat->add_option("name", cat_name)->required();
  c_cat->add_option("-o,--out", outfile);

  CLI11_PARSE(app, argc, argv);

  Report rep;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) rep.command += " ";
    rep.command += argv[i];
  }

  try {
    if (*c_check) {
      describe_quantale(rep, load_quantale(file, max_elements));
    } else if (*c_spec) {
      auto nq = load_quantale(file, max_elements);
      std::vector<Idx> s = hermitian  ? hermitian_spectrum(*nq.q)
                           : strong   ? strong_spectrum(*nq.q)
                                      : spectrum(*nq.q);
      rep.line("spectrum: " + join_names(*nq.q, s));
      rep.data["spectrum"] = name_list(*nq.q, s);
    } else if (*c_inv) {
      auto nq = load_quantale(file, max_elements);
      auto invs = find_involutions(*nq.q);
      rep.line("involutions: " + std::to_string(invs.size()));
      rep.data["count"] = invs.size();
      ordered_json list = ordered_json::array();
      for (auto& t : invs) {
        std::string s;
        ordered_json jt;
        for (int a = 0; a < nq.q->size(); ++a) {
          if (!s.empty()) s += " ";
          s += nq.q->name(a) + "->" + nq.q->name(t[a]);
          jt[nq.q->name(a)] = nq.q->name(t[a]);
        }
        rep.line("  " + s);
        list.push_back(jt);
      }
      rep.data["involutions"] = list;
    } else if (*c_tensor) {
      auto a = load_quantale(file, max_elements);
      auto b = load_quantale(file2, max_elements);
      auto t = tensor_quantale(a.q, b.q, max_tensor);
      std::string name = a.name + "_x_" + b.name;
      rep.line("tensor: " + name + " (" + std::to_string(t.product->size()) + " elements)");
      rep.data["name"] = name;
      rep.data["size"] = t.product->size();
      std::string text = export_tensor_quantale(name, t);
      if (!outfile.empty()) {
        write_file(outfile, text);
        rep.line("written: " + outfile);
      } else if (!as_json) {
        rep.line(text);
      }
    } else if (*c_coeq) {
      auto spec = load_coequalizer_spec(file, max_elements);
      auto quot = coequalizer(spec.target, *spec.source, spec.f, spec.g);
      rep.line("coequalizer: " + spec.name + " (" + std::to_string(quot.quotient->size()) +
               " elements)");
      rep.line("nucleus-fixed-points: " + join_names(*spec.target, quot.nucleus.fixed));
      rep.data["name"] = spec.name;
      rep.data["size"] = quot.quotient->size();
      rep.data["fixed_points"] = name_list(*spec.target, quot.nucleus.fixed);
      std::string text = export_quotient_quantale(spec.name, quot);
      if (!outfile.empty()) {
        write_file(outfile, text);
        rep.line("written: " + outfile);
      } else if (!as_json) {
        rep.line(text);
      }
    } else if (*c_qf) {
      auto nq = load_quantale(file, max_elements);
      auto r = quantic_frame_check(nq.q);
      rep.line(std::string("preconditions: ") +
               (r.preconditions_ok ? "ok" : ("failed (" + r.failed_precondition + ")")));
      rep.line(std::string("sided-idempotent: ") + (r.cond_idempotent_sided ? "yes" : "no"));
      rep.line(std::string("two-sided-hermitian: ") +
               (r.cond_hermitian_two_sided ? "yes" : "no"));
      rep.line(std::string("pushout: ") + (r.cond_pushout ? "yes" : "no"));
      if (!r.witness.empty()) rep.line("witness: " + r.witness);
      rep.line(std::string("quantic-frame: ") + (r.is_quantic_frame ? "yes" : "no"));
      rep.data["preconditions_ok"] = r.preconditions_ok;
      rep.data["failed_precondition"] = r.failed_precondition;
      rep.data["sided_idempotent"] = r.cond_idempotent_sided;
      rep.data["two_sided_hermitian"] = r.cond_hermitian_two_sided;
      rep.data["pushout"] = r.cond_pushout;
      rep.data["witness"] = r.witness;
      rep.data["quantic_frame"] = r.is_quantic_frame;
      if (!r.is_quantic_frame) rep.exit_code = 1;
    } else if (*c_push) {
      auto spec = load_pushout_spec(file, max_elements);
      auto res = spectrum_pushout(spec.left, spec.right, spec.part, spec.q_left, spec.q_right,
                                  spec.theta_left, spec.theta_right);
      rep.line("pushout-spectrum: " + spec.name + " (" +
               std::to_string(res.quotient.quotient->size()) + " elements)");
      rep.line(std::string("left-part-realized: ") +
               (res.left_part_isomorphic ? "yes" : "no"));
      rep.data["name"] = spec.name;
      rep.data["size"] = res.quotient.quotient->size();
      rep.data["left_part_realized"] = res.left_part_isomorphic;
      std::string text = export_quotient_quantale(spec.name, res.quotient);
      if (!outfile.empty()) {
        write_file(outfile, text);
        rep.line("written: " + outfile);
      } else if (!as_json) {
        rep.line(text);
      }
    } else if (*c_topo) {
      auto nq = load_quantale(file, max_elements);
      TopologizationResult res;
      std::string ambient_name = "sq2-1";
      if (space == "sigma_s") {
        res = spectral_topology(nq.q, false, max_opens);
      } else if (space == "sigma_h") {
        res = spectral_topology(nq.q, true, max_opens);
      } else if (space == "sigma_l") {
        res = quantic_frame_topologize(nq.q, max_opens).result;
      } else {
        fail(ErrorKind::ParseError, "unknown space '" + space + "'");
      }
      const QTopology& t = res.topology;
      std::string pts;
      for (auto& p : t.points) pts += (pts.empty() ? "" : " ") + p;
      rep.line("points: " + (pts.empty() ? "(none)" : pts));
      rep.line("opens: " + std::to_string(t.opens.size()));
      rep.line("base-form-matches: " + std::string(res.base_form_matches ? "yes" : "no"));
      rep.data["points"] = t.points;
      rep.data["opens"] = t.opens.size();
      rep.data["base_form_matches"] = res.base_form_matches;
      for (auto& opt : {std::string("separation"), std::string("sober"), std::string("base")}) {
        if (report_opts.find(opt) == std::string::npos) continue;
        if (opt == "separation") {
          auto s = separation_report(t);
          rep.line(std::string("separation: t0=") + (s.t0 ? "yes" : "no") +
                   " frechet=" + (s.frechet ? "yes" : "no") +
                   " hausdorff=" + (s.hausdorff ? "yes" : "no") +
                   " strong-hausdorff=" + (s.strong_t2 ? "yes" : "no"));
          rep.data["separation"] = {{"t0", s.t0},
                                    {"frechet", s.frechet},
                                    {"hausdorff", s.hausdorff},
                                    {"strong_hausdorff", s.strong_t2}};
        } else if (opt == "sober") {
          auto s = sober_check(t, quantization_range(*t.ambient));
          rep.line(std::string("sober: ") + (s.sober ? "yes" : "no") +
                   " (homomorphisms: " + std::to_string(s.hom_count) + ")");
          rep.data["sober"] = s.sober;
          rep.data["sober_homs"] = s.hom_count;
        } else {
          rep.line("base: " + std::to_string(res.base.size()) + " opens");
          ordered_json jb = ordered_json::array();
          for (auto& [name, f] : res.base) {
            std::string vals;
            for (Idx v : f) vals += (vals.empty() ? "" : " ") + t.ambient->name(v);
            rep.line("  " + name + " = (" + vals + ")");
            jb.push_back({{"name", name}, {"values", vals}});
          }
          rep.data["base"] = jb;
        }
      }
      if (!outfile.empty()) {
        write_file(outfile, export_topology(t, ambient_name));
        rep.line("written: " + outfile);
      }
    } else if (*c_sq2) {
      auto all = enumerate_strictly_quantized();
      rep.line(std::to_string(all.size()) + " isomorphism classes");
      rep.data["count"] = all.size();
      ordered_json list = ordered_json::array();
      for (size_t i = 0; i < all.size(); ++i) {
        std::string nm = "sq2-" + std::to_string(i + 1);
        rep.line("  " + nm + ": " + std::to_string(all[i]->size()) + " elements (" +
                 join_names(*all[i], [&] {
                   std::vector<Idx> v(all[i]->size());
                   std::iota(v.begin(), v.end(), 0);
                   return v;
                 }()) + ")");
        list.push_back({{"name", nm}, {"size", all[i]->size()}});
      }
      rep.data["classes"] = list;
    } else if (*c_cat) {
      QPtr q = catalog(cat_name);
      std::string text = export_quantale(cat_name, *q);
      rep.line("catalog: " + cat_name + " (" + std::to_string(q->size()) + " elements)");
      rep.data["name"] = cat_name;
      rep.data["size"] = q->size();
      if (!outfile.empty()) {
        write_file(outfile, text);
        rep.line("written: " + outfile);
      } else if (!as_json) {
        rep.line(text);
      }
    }
  } catch (const qlab_error& e) {
    if (as_json) {
      ordered_json out;
      out["command"] = rep.command;
      out["exit"] = 2;
      out["error"] = e.what();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "command: " << rep.command << "\n";
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
  return rep.emit(as_json);
}
