// zslab command-line interface.
//
// Commands: group info, seq check, seq smooth, invariant, extremal, verify,
// cert verify. Exit codes: 0 ok, 1 check failure, 2 usage or parse error,
// 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <zslab/zslab.hpp>

namespace {

using zslab::io::json;

struct Common {
  std::string group;
  std::string format = "text";
  int jobs = 0;  // 0 = auto (ZSLAB_JOBS, then hardware)
  std::uint64_t node_cap = zslab::SearchLimits{}.node_cap;
  std::uint64_t state_cap = zslab::SearchLimits{}.state_cap;
  std::int64_t wall_ms = 0;

  zslab::SearchLimits limits() const {
    zslab::SearchLimits lim;
    lim.node_cap = node_cap;
    lim.state_cap = state_cap;
    lim.wall_ms_cap = wall_ms;
    lim.jobs = jobs;
    return lim;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_group = true) {
  if (with_group)
    cmd->add_option("--group", c.group, "group descriptor: C<n>, D<n>, Q<n>, T:<path>")
        ->required();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "worker threads (0 = auto, env ZSLAB_JOBS)")
      ->capture_default_str();
  cmd->add_option("--node-cap", c.node_cap, "search node budget")->capture_default_str();
  cmd->add_option("--state-cap", c.state_cap, "product-lattice state budget")
      ->capture_default_str();
  cmd->add_option("--wall-ms", c.wall_ms, "wall-clock budget in ms (0 = unlimited)")
      ->capture_default_str();
}

int exit_code_for(zslab::errc code) {
  switch (code) {
    case zslab::errc::cap_exceeded:
    case zslab::errc::state_space_cap_exceeded:
    case zslab::errc::budget_exceeded:
      return 3;
    default:
      return 2;
  }
}

void emit(const Common& c, const json& j, const std::string& text,
          const std::vector<std::vector<std::string>>& csv_rows) {
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (const auto& row : csv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) std::cout << ",";
        bool quote = row[i].find_first_of(",\"\n") != std::string::npos;
        if (!quote) {
          std::cout << row[i];
        } else {
          std::cout << '"';
          for (char ch : row[i]) {
            if (ch == '"') std::cout << '"';
            std::cout << ch;
          }
          std::cout << '"';
        }
      }
      std::cout << "\n";
    }
  } else {
    std::cout << text;
  }
}

// --- group info ---

int cmd_group_info(const Common& c) {
  zslab::FiniteGroup g = zslab::io::parse_group(c.group);
  json j;
  j["descriptor"] = g.descriptor();
  j["kind"] = zslab::to_string(g.kind());
  j["order"] = g.order();
  j["abelian"] = g.abelian();
  j["exponent"] = g.exponent();
  j["max_order"] = g.max_order();
  json elems = json::array();
  for (zslab::elem_t e = 0; e < g.order(); ++e)
    elems.push_back(json{{"name", g.elem_name(e)}, {"order", g.order_of(e)}});
  j["elements"] = std::move(elems);

  std::ostringstream text;
  text << g.descriptor() << ": " << zslab::to_string(g.kind()) << " group of order " << g.order()
       << (g.abelian() ? ", abelian" : ", nonabelian") << "\n"
       << "exponent " << g.exponent() << ", max element order " << g.max_order() << "\n"
       << "elements:";
  for (zslab::elem_t e = 0; e < g.order(); ++e)
    text << " " << g.elem_name(e) << "(ord " << g.order_of(e) << ")";
  text << "\n";

  std::vector<std::vector<std::string>> rows = {
      {"descriptor", g.descriptor()},
      {"kind", zslab::to_string(g.kind())},
      {"order", std::to_string(g.order())},
      {"abelian", g.abelian() ? "true" : "false"},
      {"exponent", std::to_string(g.exponent())},
      {"max_order", std::to_string(g.max_order())}};
  emit(c, j, text.str(), rows);
  return 0;
}

// --- seq check ---

int cmd_seq_check(const Common& c, const std::string& seq_text) {
  zslab::FiniteGroup g = zslab::io::parse_group(c.group);
  zslab::Sequence s = zslab::parse_terms(g, seq_text);
  auto lim = c.limits();

  auto cert_any = zslab::find_product_one_subsequence(s, zslab::FindMode::any, lim.state_cap);
  auto cert_short =
      zslab::find_product_one_subsequence(s, zslab::FindMode::short_len, lim.state_cap);
  auto cert_tiny = zslab::find_product_one_subsequence(s, zslab::FindMode::tiny, lim.state_cap);

  json j;
  j["group"] = g.descriptor();
  j["sequence"] = s.str();
  j["length"] = s.length();
  j["cross"] = s.cross_number().str();
  j["product_one_free"] = !cert_any.has_value();
  j["short_free"] = !cert_short.has_value();
  j["tiny_free"] = !cert_tiny.has_value();
  j["certificates"] = json::object();
  j["certificates"]["any"] = cert_any ? zslab::io::certificate_to_json(g, *cert_any) : json();
  j["certificates"]["short"] =
      cert_short ? zslab::io::certificate_to_json(g, *cert_short) : json();
  j["certificates"]["tiny"] = cert_tiny ? zslab::io::certificate_to_json(g, *cert_tiny) : json();

  std::ostringstream text;
  text << "sequence " << s.str() << " over " << g.descriptor() << " (length " << s.length()
       << ", cross number " << s.cross_number().str() << ")\n";
  auto line = [&](const char* label, const std::optional<zslab::Certificate>& cert,
                  const char* free_name) {
    text << label << ": ";
    if (!cert) {
      text << "none (" << free_name << ")\n";
      return;
    }
    text << "[";
    for (std::size_t i = 0; i < cert->witness.size(); ++i)
      text << (i ? " " : "") << g.elem_name(cert->witness[i]);
    text << "] cross " << cert->cross.str() << "\n";
  };
  line("product-one subsequence", cert_any, "product-one free");
  line("short product-one subsequence", cert_short, "short-free");
  line("tiny product-one subsequence", cert_tiny, "tiny-free");

  bool cyclic = g.kind() == zslab::GroupKind::cyclic && g.order() >= 2;
  if (cyclic && !s.empty()) {
    auto w = zslab::smooth_witness(s);
    if (w) {
      j["smooth"] = json{{"generator", g.elem_name(w->generator)},
                         {"exponents", w->exponents},
                         {"sum", w->sum}};
      text << "smooth: yes, g = " << g.elem_name(w->generator) << ", exponent sum " << w->sum
           << "\n";
    } else {
      j["smooth"] = json();
      text << "smooth: no\n";
    }
  }

  std::vector<std::vector<std::string>> rows = {
      {"sequence", s.str()},
      {"length", std::to_string(s.length())},
      {"cross", s.cross_number().str()},
      {"product_one_free", cert_any ? "false" : "true"},
      {"short_free", cert_short ? "false" : "true"},
      {"tiny_free", cert_tiny ? "false" : "true"}};
  emit(c, j, text.str(), rows);
  return 0;
}

// --- seq smooth ---

int cmd_seq_smooth(const Common& c, const std::string& seq_text, bool all) {
  zslab::FiniteGroup g = zslab::io::parse_group(c.group);
  zslab::Sequence s = zslab::parse_terms(g, seq_text);
  auto to_json = [&](const zslab::SmoothWitness& w) {
    return json{{"generator", g.elem_name(w.generator)},
                {"exponents", w.exponents},
                {"sum", w.sum}};
  };
  json j;
  std::ostringstream text;
  std::vector<std::vector<std::string>> rows;
  if (all) {
    j = json::array();
    for (const auto& w : zslab::smooth_witnesses(s)) {
      j.push_back(to_json(w));
      text << "g = " << g.elem_name(w.generator) << ", exponent sum " << w.sum << "\n";
      rows.push_back({g.elem_name(w.generator), std::to_string(w.sum)});
    }
    if (j.empty()) text << "not smooth\n";
  } else {
    auto w = zslab::smooth_witness(s);
    if (w) {
      j = to_json(*w);
      text << "smooth: g = " << g.elem_name(w->generator) << ", exponent sum " << w->sum << "\n";
      rows.push_back({g.elem_name(w->generator), std::to_string(w->sum)});
    } else {
      j = json();
      text << "not smooth\n";
    }
  }
  emit(c, j, text.str(), rows);
  return 0;
}

// --- invariant ---

int cmd_invariant(const Common& c, const std::string& name, const std::string& cache_path) {
  zslab::FiniteGroup g = zslab::io::parse_group(c.group);
  auto lim = c.limits();

  zslab::io::ResultsCache cache;
  const std::string key = zslab::io::ResultsCache::key(g.descriptor(), name, "");
  if (!cache_path.empty()) {
    cache = zslab::io::ResultsCache::load(cache_path);
    if (auto hit = cache.lookup(key)) {
      json j = *hit;
      j["cached"] = true;
      std::ostringstream text;
      text << name << "(" << g.descriptor() << ") = " << j["value"].dump()
           << " (cached, exhaustive)\n";
      emit(c, j, text.str(),
           {{name, j["value"].dump(), "cached"}});
      return 0;
    }
  }

  zslab::InvariantResult r;
  if (name == "d")
    r = zslab::small_davenport(g, lim);
  else if (name == "eta")
    r = zslab::eta(g, lim);
  else if (name == "ti")
    r = zslab::ti(g, lim);
  else if (name == "k")
    r = zslab::small_cross_number(g, lim);
  else if (name == "K")
    r = zslab::big_cross_number_K(g, lim);
  else
    zslab::fail(zslab::errc::invalid_parameter, "unknown invariant '" + name + "'");

  json j = zslab::io::invariant_result_to_json(r);
  std::ostringstream text;
  const std::string value =
      (name == "k" || name == "K") ? r.cross.str() : std::to_string(r.value);
  text << name << "(" << g.descriptor() << ") = " << value
       << (r.stats.exhaustive ? "" : "  [NOT exhaustive: budget hit]") << "\n"
       << "nodes " << r.stats.nodes << ", " << r.elapsed_ms << " ms, " << r.witnesses.size()
       << " extremal witness(es)\n";
  for (std::size_t i = 0; i < r.witnesses.size() && i < 8; ++i)
    text << "  " << r.witnesses[i].str() << "\n";
  if (r.witnesses.size() > 8) text << "  ... " << r.witnesses.size() - 8 << " more\n";

  emit(c, j, text.str(),
       {{"invariant", name},
        {"value", value},
        {"exhaustive", r.stats.exhaustive ? "true" : "false"},
        {"nodes", std::to_string(r.stats.nodes)}});

  if (!cache_path.empty() && r.stats.exhaustive) {
    cache.store(key, r);
    cache.save();
  }
  return r.stats.exhaustive ? 0 : 3;
}

// --- extremal ---

int cmd_extremal(const Common& c, const std::string& family) {
  zslab::FiniteGroup g = zslab::io::parse_group(c.group);
  std::vector<zslab::Sequence> fam = zslab::extremal_family(g, family);
  json j = json::array();
  std::ostringstream text;
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : fam) {
    j.push_back(s.str());
    text << s.str() << "\n";
    rows.push_back({s.str()});
  }
  emit(c, j, text.str(), rows);
  return 0;
}

// --- verify ---

int cmd_verify(const Common& c, std::vector<std::string> ids, const zslab::CheckParams& params) {
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = zslab::check_ids();
  auto lim = c.limits();
  json out = json::array();
  std::ostringstream text;
  std::vector<std::vector<std::string>> rows;
  bool any_fail = false;
  for (const std::string& id : ids) {
    zslab::CheckReport rep = zslab::run_check(id, params, lim);
    any_fail = any_fail || rep.status == zslab::CheckStatus::fail;
    out.push_back(zslab::check_report_to_json(rep));
    text << rep.check << ": " << zslab::to_string(rep.status) << " (" << rep.elapsed_ms
         << " ms)\n";
    for (const auto& d : rep.details) {
      text << "  " << d.instance;
      if (!d.observed.empty()) text << ": " << d.observed;
      if (!d.expected.empty()) text << " | expected " << d.expected;
      if (!d.witness.empty()) text << " | witness " << d.witness;
      if (!d.note.empty()) text << " [" << d.note << "]";
      text << "\n";
    }
    rows.push_back({rep.check, zslab::to_string(rep.status), std::to_string(rep.elapsed_ms)});
  }
  emit(c, out, text.str(), rows);
  return any_fail ? 1 : 0;
}

// --- cert verify ---

int cmd_cert_verify(const Common& c, const std::string& seq_text, const std::string& cert_path) {
  zslab::FiniteGroup g = zslab::io::parse_group(c.group);
  zslab::Sequence s = zslab::parse_terms(g, seq_text);
  std::ifstream in(cert_path);
  if (!in) zslab::fail(zslab::errc::parse_error, "cannot open certificate '" + cert_path + "'");
  json cj;
  try {
    in >> cj;
  } catch (const json::exception& e) {
    zslab::fail(zslab::errc::parse_error, "certificate '" + cert_path + "': " + e.what());
  }
  zslab::Certificate cert = zslab::io::certificate_from_json(g, cj);
  zslab::VerifyResult res = zslab::verify_certificate(s, cert);
  json j{{"ok", res.ok}, {"reason", res.reason}};
  std::ostringstream text;
  text << (res.ok ? "ok" : "REJECTED: " + res.reason) << "\n";
  emit(c, j, text.str(), {{res.ok ? "ok" : "rejected", res.reason}});
  return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zslab: zero-sum invariants of finite groups"};
  app.require_subcommand(1);

  Common common;

  // group info
  auto* grp = app.add_subcommand("group", "group inspection");
  grp->require_subcommand(1);
  auto* grp_info = grp->add_subcommand("info", "print structure facts");
  add_common(grp_info, common);

  // seq check / seq smooth
  std::string seq_text;
  bool smooth_all = false;
  auto* seq = app.add_subcommand("seq", "sequence detectors");
  seq->require_subcommand(1);
  auto* seq_check = seq->add_subcommand("check", "product-one / short / tiny verdicts");
  add_common(seq_check, common);
  seq_check->add_option("--seq", seq_text, "sequence literal, e.g. \"1^5\" or \"a1 b0\"")
      ->required();
  auto* seq_smooth = seq->add_subcommand("smooth", "smooth witness for cyclic groups");
  add_common(seq_smooth, common);
  seq_smooth->add_option("--seq", seq_text, "sequence literal")->required();
  seq_smooth->add_flag("--all", smooth_all, "print every generator witness");

  // invariant
  std::string inv_name, cache_path;
  auto* inv = app.add_subcommand("invariant", "compute d, eta, ti, k, or K");
  add_common(inv, common);
  inv->add_option("name", inv_name, "one of d, eta, ti, k, K")
      ->required()
      ->check(CLI::IsMember({"d", "eta", "ti", "k", "K"}));
  inv->add_option("--cache", cache_path, "results cache file (JSON)");

  // extremal
  std::string family;
  auto* ext = app.add_subcommand("extremal", "closed-form extremal families");
  add_common(ext, common);
  ext->add_option("--family", family, "family id")
      ->required()
      ->check(CLI::IsMember(zslab::extremal_family_ids()));

  // verify
  std::vector<std::string> check_list;
  std::string p_n, p_n2, p_groups, p_packing, p_report_n;
  long long p_seed = -1, p_samples = -1;
  auto* ver = app.add_subcommand("verify", "run registered checks");
  add_common(ver, common, false);
  ver->add_option("checks", check_list, "check ids (C1..C9) or 'all'");
  ver->add_option("--n", p_n, "instance range, e.g. 3..12 or 4,8,9");
  ver->add_option("--n2", p_n2, "secondary range (C4 part 2)");
  ver->add_option("--groups", p_groups, "comma list of group descriptors (C9)");
  ver->add_option("--packing", p_packing, "packing instance list (C5)");
  ver->add_option("--report-n", p_report_n, "report-only range (C7c)");
  ver->add_option("--seed", p_seed, "random seed for sampled checks");
  ver->add_option("--samples", p_samples, "random sample count");

  // cert verify
  std::string cert_path;
  auto* cert = app.add_subcommand("cert", "certificate operations");
  cert->require_subcommand(1);
  auto* cert_verify = cert->add_subcommand("verify", "verify a stored certificate");
  add_common(cert_verify, common);
  cert_verify->add_option("--seq", seq_text, "sequence literal the certificate refers to")
      ->required();
  cert_verify->add_option("--cert", cert_path, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (grp_info->parsed()) return cmd_group_info(common);
    if (seq_check->parsed()) return cmd_seq_check(common, seq_text);
    if (seq_smooth->parsed()) return cmd_seq_smooth(common, seq_text, smooth_all);
    if (inv->parsed()) return cmd_invariant(common, inv_name, cache_path);
    if (ext->parsed()) return cmd_extremal(common, family);
    if (ver->parsed()) {
      zslab::CheckParams params;
      if (!p_n.empty()) params["n"] = p_n;
      if (!p_n2.empty()) params["n2"] = p_n2;
      if (!p_groups.empty()) params["groups"] = p_groups;
      if (!p_packing.empty()) params["packing"] = p_packing;
      if (!p_report_n.empty()) params["report_n"] = p_report_n;
      if (p_seed >= 0) params["seed"] = std::to_string(p_seed);
      if (p_samples >= 0) params["samples"] = std::to_string(p_samples);
      return cmd_verify(common, check_list, params);
    }
    if (cert_verify->parsed()) return cmd_cert_verify(common, seq_text, cert_path);
  } catch (const zslab::Error& e) {
    std::cerr << "error [" << zslab::to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
