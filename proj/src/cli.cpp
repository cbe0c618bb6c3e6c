#include "equicode/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "equicode/bounds.hpp"
#include "equicode/constructions.hpp"
#include "equicode/error.hpp"
#include "equicode/graphlab.hpp"
#include "equicode/io.hpp"

namespace equicode {

std::optional<AngleSet> observed_angle_set(const Code& code, const Tolerance& tol, std::size_t max_points) {
  std::vector<double> values;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) values.push_back(code.inner(i, j));
  if (values.empty()) return AngleSet::of_points({}, tol.angle_tol);
  std::sort(values.begin(), values.end());
  std::vector<double> points;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] - values[i - 1] > tol.angle_tol) {
      double sum = 0.0;
      for (std::size_t k = start; k < i; ++k) sum += values[k];
      points.push_back(sum / static_cast<double>(i - start));
      if (points.size() > max_points) return std::nullopt;
      start = i;
    }
  }
  if (points.back() >= 1.0) return std::nullopt;
  return AngleSet::of_points(std::move(points), tol.angle_tol);
}

namespace cli {

namespace {

using nlohmann::json;

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidParams:
    case ErrorKind::TooLarge:
      return kUsage;
    default:
      return kRuntime;
  }
}

json tolerance_json(const Tolerance& tol) {
  return {{"eig_zero", tol.eig_zero}, {"psd_slack", tol.psd_slack}, {"angle_tol", tol.angle_tol}};
}

json report(const Tolerance& tol, json certificates) {
  return {{"artifact_version", kArtifactVersion}, {"tolerances", tolerance_json(tol)},
          {"certificates", std::move(certificates)}};
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad index '" + item + "'");
    }
    if (pos != item.size()) throw Error(ErrorKind::ParseError, "bad index '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<std::size_t>> parse_parts(const std::string& text) {
  std::vector<std::vector<std::size_t>> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) parts.push_back(parse_indices(item));
  return parts;
}

std::string summary(const Code& code, const Tolerance& tol) {
  std::string s = "size " + std::to_string(code.size()) + ", dim " + std::to_string(code.dim());
  if (code.size() >= 2) {
    if (auto obs = observed_angle_set(code, tol, 8)) s += ", angles " + obs->to_string();
  }
  return s;
}

struct Session {
  std::ostream& out;
  std::ostream& err;
  Tolerance tol;

  CodeFile load_file(const std::string& path) const { return parse_code_file(read_text_file(path)); }

  void emit_report(const json& r, const std::string& path) const {
    if (path.empty())
      out << r.dump(2) << '\n';
    else
      write_text_file(path, r.dump(2) + "\n");
  }
};

int cmd_construct(Session& s, const std::string& name, std::size_t n, std::size_t r, std::size_t k, double alpha1,
                  std::uint64_t seed, std::size_t attempts, const std::string& out_path) {
  json meta = {{"construction", name}, {"seed", nullptr}};
  json params = json::object();
  std::optional<Code> code;
  if (name == "lemmens-seidel") {
    params["n"] = n;
    code = lemmens_seidel_code(n, s.tol);
  } else if (name == "odd-reciprocal") {
    params["n"] = n;
    params["r"] = r;
    code = odd_reciprocal_code(n, r, s.tol);
  } else if (name == "lines28") {
    code = seven_dim_28_lines();
  } else if (name == "simplex") {
    params["r"] = r;
    code = regular_simplex(r, s.tol);
  } else if (name == "binary-kcode") {
    params["n"] = n;
    params["k"] = k;
    code = binary_kcode(n, k);
  } else if (name == "concat") {
    params = {{"n", n}, {"k", k}, {"r", r}, {"alpha1", alpha1}};
    ConcatParams p = ConcatParams::make(n, k, r, alpha1, seed);
    p.max_attempts = attempts;
    ConcatResult res = concatenated_code(p, s.tol);
    meta["seed"] = seed;
    meta["achieved_beta"] = res.achieved_beta;
    meta["beta_target"] = p.beta_target;
    meta["t_threshold"] = p.t_threshold;
    meta["alphas"] = p.alphas;
    meta["attempts"] = res.report.attempts;
    meta["seed_used"] = res.report.seed_used;
    meta["copy_seeds"] = res.report.copy_seeds;
    meta["copies"] = r + 1;
    meta["copy_size"] = res.report.copy_size;
    code = std::move(res.code);
  } else {
    throw Error(ErrorKind::InvalidParams, "unknown construction '" + name + "'");
  }
  meta["parameters"] = params;
  meta["gram_rank"] = code_rank(*code, s.tol);
  if (code->size() >= 2)
    if (auto a = detect_equiangular(*code, s.tol)) meta["equiangular_alpha"] = *a;

  const std::string text = write_code_file(code_file_of(*code, meta));
  if (out_path.empty()) {
    s.out << text;
    s.err << summary(*code, s.tol) << '\n';
  } else {
    write_text_file(out_path, text);
    s.out << summary(*code, s.tol) << '\n';
  }
  return kPass;
}

int cmd_verify(Session& s, const std::string& path, const std::string& l_spec, const std::string& report_path) {
  const Code code = load_code(s.load_file(path), s.tol);
  json certs = json::array();
  bool pass = true;
  if (!l_spec.empty()) {
    const AngleSet allowed = AngleSet::parse(l_spec, s.tol.angle_tol);
    const ValidationReport rep = validate_code(code, allowed);
    json violations = json::array();
    for (std::size_t i = 0; i < rep.violations.size() && i < 100; ++i) {
      const auto& v = rep.violations[i];
      violations.push_back({{"i", v.i}, {"j", v.j}, {"inner_product", v.inner_product}, {"distance", v.distance}});
    }
    json hist = json::object();
    for (std::size_t e = 0; e < allowed.element_count(); ++e) hist[allowed.element_label(e)] = rep.histogram[e];
    Certificate c = Certificate::compare("validate", "every pair of distinct vectors has inner product in L",
                                         static_cast<double>(rep.violations.size()), 0.0, 0.0,
                                         {{"L", allowed.to_string()},
                                          {"violation_count", rep.violations.size()},
                                          {"violations", violations},
                                          {"histogram", hist}});
    pass = c.pass;
    certs.push_back(to_json(c));
    if (!pass) s.err << rep.violations.size() << " violations\n";
  }
  if (code.size() >= 2) {
    const auto a = detect_equiangular(code, s.tol);
    json w = {{"equiangular", a.has_value()}};
    if (a) w["alpha"] = *a;
    if (auto obs = observed_angle_set(code, s.tol)) w["observed"] = obs->to_string();
    Certificate c;
    c.name = "detect_equiangular";
    c.statement = "all off-diagonal inner products share one magnitude";
    c.pass = true;
    c.witness = w;
    certs.push_back(to_json(c));
  }
  s.emit_report(report(s.tol, certs), report_path);
  return pass ? kPass : kCertifiedFail;
}

struct CertifyInputs {
  std::optional<double> alpha;
  std::optional<std::size_t> t;
  std::optional<double> beta;
  std::optional<double> neg_alpha;
  std::string parts;
  std::string l_spec;
};

int cmd_certify(Session& s, const std::string& path, const std::string& suite, CertifyInputs in,
                const std::string& report_path) {
  const CodeFile file = s.load_file(path);
  const Code code = load_code(file, s.tol);
  const json& meta = file.metadata;
  if (!in.alpha && meta.contains("alpha") && meta["alpha"].is_number()) in.alpha = meta["alpha"].get<double>();
  if (!in.t && meta.contains("t") && meta["t"].is_number_unsigned()) in.t = meta["t"].get<std::size_t>();
  if (!in.beta && meta.contains("achieved_beta") && meta["achieved_beta"].is_number())
    in.beta = meta["achieved_beta"].get<double>();

  auto need_params = [&]() {
    if (!in.alpha || !in.t) throw Error(ErrorKind::InvalidParams, "needs --alpha and --t (or metadata alpha, t)");
    return AngleParams::make(*in.alpha, *in.t);
  };

  using Check = std::pair<const char*, std::function<Certificate()>>;
  const std::vector<Check> checks = {
      {"gerzon", [&] { return gerzon_certificate(code, s.tol); }},
      {"negclique",
       [&] {
         double a = 0.0;
         if (in.neg_alpha) {
           a = *in.neg_alpha;
         } else {
           double mx = -1.0;
           for (std::size_t i = 0; i < code.size(); ++i)
             for (std::size_t j = i + 1; j < code.size(); ++j) mx = std::max(mx, code.inner(i, j));
           if (code.size() < 2 || mx >= 0.0) throw Error(ErrorKind::NotAnLCode, "code has a non-negative edge");
           a = -mx;
         }
         return negative_clique_certificate(code, a, s.tol);
       }},
      {"schnirelman", [&] { return schnirelman_applied_certificate(code, need_params(), s.tol); }},
      {"matching", [&] { return matching_full_rank_certificate(code, need_params(), s.tol); }},
      {"multipartite",
       [&] {
         std::vector<std::vector<std::size_t>> parts;
         if (!in.parts.empty()) {
           parts = parse_parts(in.parts);
         } else if (meta.contains("copies") && meta.contains("copy_size")) {
           const auto copies = meta["copies"].get<std::size_t>();
           const auto size = meta["copy_size"].get<std::size_t>();
           for (std::size_t c = 0; c < copies; ++c) {
             parts.emplace_back();
             for (std::size_t i = 0; i < size; ++i) parts.back().push_back(c * size + i);
           }
         } else {
           throw Error(ErrorKind::InvalidParams, "needs --parts");
         }
         double a = 0.0;
         if (in.alpha)
           a = *in.alpha;
         else if (meta.contains("alphas") && meta["alphas"].size() == 1)
           a = meta["alphas"][0].get<double>();
         else
           throw Error(ErrorKind::InvalidParams, "needs --alpha");
         if (!in.beta) throw Error(ErrorKind::InvalidParams, "needs --beta");
         return multipartite_certificate(code, parts, a, *in.beta, s.tol);
       }},
      {"dgs",
       [&] {
         std::optional<AngleSet> l;
         if (!in.l_spec.empty())
           l = AngleSet::parse(in.l_spec, s.tol.angle_tol);
         else
           l = observed_angle_set(code, s.tol);
         if (!l) throw Error(ErrorKind::NotFinite, "too many distinct inner products");
         return dgs_bound_check(code, *l, s.tol);
       }},
      {"lambda", [&] { return lambda_inequality_check(code, need_params(), s.tol); }},
  };

  if (suite != "all" && std::none_of(checks.begin(), checks.end(), [&](const Check& c) { return suite == c.first; }))
    throw Error(ErrorKind::ParseError, "unknown suite '" + suite + "'");

  json certs = json::array();
  bool pass = true;
  for (const auto& [name, fn] : checks) {
    if (suite != "all" && suite != name) continue;
    try {
      const Certificate c = fn();
      pass = pass && c.pass;
      certs.push_back(to_json(c));
      s.err << name << ": " << (c.pass ? "pass" : "FAIL") << " (lhs " << c.lhs << ", rhs " << c.rhs << ")\n";
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InternalError) throw;
      certs.push_back({{"name", name}, {"skipped", true}, {"reason", e.what()}});
      s.err << name << ": skipped (" << e.what() << ")\n";
    }
  }
  s.emit_report(report(s.tol, certs), report_path);
  return pass ? kPass : kCertifiedFail;
}

int cmd_project(Session& s, const std::string& path, const std::string& clique, const std::string& xs,
                const std::string& out_path, std::string sidecar) {
  const Code code = load_code(s.load_file(path), s.tol);
  const std::vector<std::size_t> y = parse_indices(clique);
  std::vector<std::size_t> x;
  if (!xs.empty()) {
    x = parse_indices(xs);
  } else {
    for (std::size_t i = 0; i < code.size(); ++i)
      if (std::find(y.begin(), y.end(), i) == y.end()) x.push_back(i);
  }
  const double gamma = clique_gamma(code, y, s.tol);
  const Code projected = project_onto_complement(code, x, y, s.tol);
  json meta = {{"construction", "projection"},
               {"parameters", {{"source", path}, {"clique", y}, {"projected", x}, {"gamma", gamma}}},
               {"seed", nullptr}};
  write_text_file(out_path, write_code_file(code_file_of(projected, meta)));
  if (sidecar.empty()) sidecar = out_path + ".sidecar.json";
  const json side = {{"clique", y}, {"gamma", gamma}, {"projected_indices", x}, {"projected_size", projected.size()}};
  write_text_file(sidecar, side.dump(2) + "\n");
  s.out << summary(projected, s.tol) << '\n';
  return kPass;
}

int cmd_reduce(Session& s, const std::string& path, std::size_t t, const std::string& out_path, std::string sidecar) {
  const Code code = load_code(s.load_file(path), s.tol);
  const ReductionOutcome r = reduction_pipeline(code, t, s.tol);
  json buckets = json::array();
  for (const Bucket& b : r.buckets) {
    json jb = {{"T_size", b.t_size}, {"members", b.members}};
    if (b.mask) jb["mask"] = *b.mask;
    buckets.push_back(jb);
  }
  json side = {{"alpha", r.alpha},
               {"t", r.t},
               {"Y", r.y},
               {"switched", r.switched},
               {"S_Y", r.s_y},
               {"buckets", buckets},
               {"clique_from_ramsey", r.clique_from_ramsey},
               {"accounting", {{"total", r.total}, {"accounted", r.accounted}, {"identity_holds", r.total == r.accounted}}},
               {"garbage_bound_holds", r.garbage_bound_holds ? json(*r.garbage_bound_holds) : json(nullptr)},
               {"projected_size", r.projected ? r.projected->size() : 0},
               {"projected_file", r.projected ? json(out_path) : json(nullptr)}};
  if (r.projected) {
    json meta = {{"construction", "reduction"},
                 {"parameters", {{"source", path}, {"t", t}}},
                 {"seed", nullptr},
                 {"alpha", r.alpha},
                 {"t", t}};
    write_text_file(out_path, write_code_file(code_file_of(*r.projected, meta)));
  }
  if (sidecar.empty()) sidecar = out_path + ".sidecar.json";
  write_text_file(sidecar, side.dump(2) + "\n");
  s.out << "accounting " << r.accounted << " = " << r.total << ", projected size "
        << (r.projected ? r.projected->size() : 0) << '\n';
  return r.total == r.accounted ? kPass : kCertifiedFail;
}

int cmd_export_gram(Session& s, const std::string& path, const std::string& out_path) {
  const Code code = load_code(s.load_file(path), s.tol);
  const std::string csv = gram_csv(gram_of(code));
  if (out_path.empty())
    s.out << csv;
  else
    write_text_file(out_path, csv);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructs and certifies spherical codes and equiangular line systems", "equicode"};
  app.require_subcommand(1);
  std::string tol_text;
  app.add_option("--tol", tol_text, "angle_tol value or key=value list (overrides EQUICODE_TOL)");

  std::string name, out_path, file, l_spec, report_path, suite = "all", clique, xs, sidecar, parts;
  std::size_t n = 0, r = 2, k = 1, t = 0, attempts = 32;
  double alpha1 = 0.5;
  std::uint64_t seed = 0;
  std::optional<double> alpha, beta, neg_alpha;
  std::optional<std::size_t> t_opt;

  auto* construct = app.add_subcommand("construct", "Build a code and write it as a CodeFile");
  construct->add_option("name", name, "lemmens-seidel | odd-reciprocal | lines28 | simplex | binary-kcode | concat")
      ->required();
  construct->add_option("--n", n, "dimension parameter");
  construct->add_option("--r", r, "block size or simplex dimension");
  construct->add_option("--k", k, "subset size");
  construct->add_option("--alpha1", alpha1, "smallest positive angle of the concatenated code");
  construct->add_option("--seed", seed, "master seed for randomized constructions");
  construct->add_option("--attempts", attempts, "seed retry budget");
  construct->add_option("--out", out_path, "output CodeFile (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Validate a code against an angle set");
  verify->add_option("file", file)->required();
  verify->add_option("--L", l_spec, "terms interval:lo,hi or point:x joined by '+'");
  verify->add_option("--report", report_path, "write the report here instead of stdout");

  auto* certify = app.add_subcommand("certify", "Run bound certificates");
  certify->add_option("file", file)->required();
  certify->add_option("--suite", suite, "gerzon | negclique | schnirelman | matching | multipartite | dgs | lambda | all");
  certify->add_option("--alpha", alpha, "alpha of an L(alpha,t)-code or of multipartite cliques");
  certify->add_option("--t", t_opt, "clique size t of an L(alpha,t)-code");
  certify->add_option("--beta", beta, "beta for the multipartite check");
  certify->add_option("--neg-alpha", neg_alpha, "alpha of a [-1,-alpha]-code");
  certify->add_option("--parts", parts, "parts as index lists, e.g. 0,1,2;3,4,5");
  certify->add_option("--L", l_spec, "finite angle set for dgs");
  certify->add_option("--report", report_path, "write the report here instead of stdout");

  auto* project = app.add_subcommand("project", "Project onto the complement of a clique");
  project->add_option("file", file)->required();
  project->add_option("--clique", clique, "clique indices, comma separated")->required();
  project->add_option("--x", xs, "indices to project (default: all others)");
  project->add_option("--out", out_path)->required();
  project->add_option("--sidecar", sidecar);

  auto* reduce = app.add_subcommand("reduce", "Run the positive-clique reduction");
  reduce->add_option("file", file)->required();
  reduce->add_option("--t", t, "positive clique size")->required();
  reduce->add_option("--out", out_path)->required();
  reduce->add_option("--sidecar", sidecar);

  auto* export_gram = app.add_subcommand("export-gram", "Write the Gram matrix as CSV");
  export_gram->add_option("file", file)->required();
  export_gram->add_option("--out", out_path, "CSV path (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    Session s{out, err, Tolerance::from_env()};
    if (!tol_text.empty()) s.tol = Tolerance::parse(tol_text, s.tol);
    if (*construct) return cmd_construct(s, name, n, r, k, alpha1, seed, attempts, out_path);
    if (*verify) return cmd_verify(s, file, l_spec, report_path);
    if (*certify)
      return cmd_certify(s, file, suite, CertifyInputs{alpha, t_opt, beta, neg_alpha, parts, l_spec}, report_path);
    if (*project) return cmd_project(s, file, clique, xs, out_path, sidecar);
    if (*reduce) return cmd_reduce(s, file, t, out_path, sidecar);
    if (*export_gram) return cmd_export_gram(s, file, out_path);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e);
  }
  return kUsage;
}

}  // namespace cli
}  // namespace equicode
