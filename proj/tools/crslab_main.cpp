// Command-line surface over the exact subgroup-law toolkit.
//
// Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded,
// 4 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crslab/caps.hpp"
#include "crslab/crs.hpp"
#include "crslab/errors.hpp"
#include "crslab/finab.hpp"
#include "crslab/fqmatrix.hpp"
#include "crslab/freeword.hpp"
#include "crslab/json_io.hpp"
#include "crslab/numtheory.hpp"
#include "crslab/permgroup.hpp"
#include "crslab/qformulas.hpp"
#include "crslab/rng.hpp"
#include "crslab/schreier.hpp"
#include "crslab/torus2.hpp"

namespace {

using namespace crslab;
using nlohmann::json;

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  std::uint64_t group_cap = kDefaultGroupOrderCap;
  std::string format = "plain";
  std::string out_path;
};

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw domain_error(std::string(name) + " must be an unsigned integer, got '" + value + "'");
  }
  return parsed;
}

// Output sink: --out path or stdout. LF line endings throughout.
class Sink {
 public:
  explicit Sink(const RunConfig& config) {
    if (!config.out_path.empty()) {
      file_.open(config.out_path, std::ios::binary);
      if (!file_) throw domain_error("cannot open output path " + config.out_path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

double approx(const Rational& r) { return r.convert_to<double>(); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::vector<freegrp::Permutation> parse_permutations(const std::string& text) {
  std::vector<freegrp::Permutation> perms;
  std::uint32_t degree = 1;
  for (const auto& part : split(text, ';')) {
    perms.push_back(freegrp::Permutation::parse_cycles(part));
    degree = std::max(degree, perms.back().degree());
  }
  for (auto& p : perms) p = p.padded_to(degree);
  return perms;
}

// ---- rankdist ----------------------------------------------------------

void run_rankdist(const RunConfig& config, std::uint64_t q, std::uint32_t kappa, std::uint32_t n,
                  bool exact, std::optional<std::uint64_t> samples) {
  if (exact == samples.has_value()) {
    throw domain_error("rankdist: pass exactly one of --exact or --samples");
  }
  std::vector<Rational> formula(n + 1);
  for (std::uint32_t k = 0; k <= n; ++k) formula[k] = qlinalg::vtilde(n, k, kappa, q);

  std::vector<Rational> empirical;
  if (exact) {
    auto field = qlinalg::FieldSpec::make(q);
    const auto enumerated = crs::intersection_dim_exact(field, kappa, n, config.enum_cap);
    for (std::uint32_t k = 0; k <= n; ++k) {
      if (enumerated[k] != formula[k]) {
        throw internal_error("rankdist: enumeration disagrees with the closed form at k = " +
                             std::to_string(k));
      }
    }
  } else {
    auto field = qlinalg::FieldSpec::make(q);
    SplitMix64 rng = SplitMix64::for_stream(config.seed, 0);
    const auto counts = crs::intersection_dim_monte_carlo(field, kappa, n, *samples, rng);
    for (std::uint32_t k = 0; k <= n; ++k) {
      empirical.emplace_back(BigInt(counts[k]), BigInt(*samples));
    }
  }

  Sink sink(config);
  std::ostream& out = sink.stream();
  if (config.format == "json") {
    json doc;
    doc["q"] = q;
    doc["kappa"] = kappa;
    doc["n"] = n;
    json rows = json::array();
    for (std::uint32_t k = 0; k <= n; ++k) {
      json row;
      row["k"] = k;
      row["exact"] = rational_string(formula[k]);
      if (!empirical.empty()) {
        row["empirical"] = rational_string(empirical[k]);
        Rational err = formula[k] - empirical[k];
        if (err < 0) err = -err;
        row["abs_err"] = rational_string(err);
      }
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
  } else if (config.format == "csv") {
    out << (empirical.empty() ? "k,exact\n" : "k,exact,empirical,abs_err\n");
    for (std::uint32_t k = 0; k <= n; ++k) {
      out << k << ',' << rational_string(formula[k]);
      if (!empirical.empty()) {
        Rational err = formula[k] - empirical[k];
        if (err < 0) err = -err;
        out << ',' << rational_string(empirical[k]) << ',' << rational_string(err);
      }
      out << '\n';
    }
  } else {
    for (std::uint32_t k = 0; k <= n; ++k) {
      out << "k=" << k << "  exact=" << rational_string(formula[k]) << "  (~" << approx(formula[k])
          << ")";
      if (!empirical.empty()) {
        out << "  empirical=" << rational_string(empirical[k]) << "  (~" << approx(empirical[k])
            << ")";
      }
      out << '\n';
    }
  }
}

// ---- crs ----------------------------------------------------------------

crs::CrsParam parse_param(std::uint64_t n, std::uint64_t m, const std::string& group) {
  return crs::CrsParam::checked(n, m, finab::FinAbGroup::parse(group));
}

crs::Side parse_side(const std::string& side) {
  if (side == "ker" || side == "kernel") return crs::Side::kernel;
  if (side == "ann" || side == "annihilator") return crs::Side::annihilator;
  throw domain_error("side must be 'ker' or 'ann'");
}

void run_crs_enum(const RunConfig& config, std::uint64_t n, std::uint64_t max_order) {
  const auto params = crs::enumerate_params(n, max_order);
  Sink sink(config);
  std::ostream& out = sink.stream();
  if (config.format == "json") {
    json arr = json::array();
    for (const auto& p : params) {
      json e;
      e["n"] = p.ambient_n;
      e["m"] = p.m;
      e["group"] = json::parse(p.group.to_tuple_string());
      arr.push_back(std::move(e));
    }
    out << arr.dump(2) << "\n";
  } else if (config.format == "csv") {
    out << "m,group\n";
    for (const auto& p : params) out << p.m << ",\"" << p.group.to_tuple_string() << "\"\n";
  } else {
    for (const auto& p : params) out << p.to_string() << '\n';
  }
}

void run_crs_sample(const RunConfig& config, const crs::CrsParam& param, std::uint32_t coords,
                    crs::Side side, std::uint64_t samples) {
  SplitMix64 rng = SplitMix64::for_stream(config.seed, 0);
  Sink sink(config);
  std::ostream& out = sink.stream();
  for (std::uint64_t i = 0; i < samples; ++i) {
    const crs::TruncSubgroup s = side == crs::Side::kernel
                                     ? crs::sample_kernel_side(param, coords, rng)
                                     : crs::sample_annihilator_side(param, coords, rng);
    out << crs::subgroup_to_json_line(s) << '\n';
  }
}

void run_crs_exact(const RunConfig& config, const crs::CrsParam& param, std::uint32_t coords,
                   crs::Side side) {
  const auto dist = crs::exact_distribution(param, side, coords, config.enum_cap);
  Sink sink(config);
  std::ostream& out = sink.stream();
  if (config.format == "csv") {
    out << "gens,prob\n";
    for (const auto& [subgroup, prob] : dist.entries()) {
      std::ostringstream gens;
      gens << '[';
      for (std::size_t i = 0; i < subgroup.gens().size(); ++i) {
        if (i) gens << ';';
        gens << '[';
        for (std::size_t j = 0; j < subgroup.gens()[i].size(); ++j) {
          if (j) gens << ' ';
          gens << subgroup.gens()[i][j];
        }
        gens << ']';
      }
      gens << ']';
      out << '"' << gens.str() << "\"," << rational_string(prob) << '\n';
    }
  } else if (config.format == "plain") {
    for (const auto& [subgroup, prob] : dist.entries()) {
      out << crs::subgroup_to_json_line(subgroup) << "  p=" << rational_string(prob) << "  (~"
          << approx(prob) << ")\n";
    }
  } else {
    out << crs::distribution_to_json(dist) << '\n';
  }
}

void run_crs_limit(const RunConfig& config, const std::string& descriptor) {
  const auto seq = crs::descriptor_from_json(descriptor);
  const crs::CrsParam limit = crs::classify_limit(seq);
  Sink sink(config);
  std::ostream& out = sink.stream();
  if (config.format == "json") {
    json doc;
    doc["m"] = limit.m;
    doc["group"] = json::parse(limit.group.to_tuple_string());
    out << doc.dump(2) << '\n';
  } else {
    out << "(" << limit.m << ", "
        << (limit.group.trivial() ? std::string("trivial") : limit.group.to_sum_string()) << ")\n";
  }
}

// ---- torus ---------------------------------------------------------------

void run_torus_decompose(const RunConfig& config, std::uint64_t r) {
  const Rational residual = torus2::decompose_tau_residual(r, config.enum_cap);
  Sink sink(config);
  std::ostream& out = sink.stream();
  if (config.format == "json") {
    json doc;
    doc["r"] = r;
    doc["residual"] = rational_string(residual);
    out << doc.dump(2) << '\n';
  } else {
    out << "residual " << rational_string(residual) << '\n';
  }
}

void run_torus_beta(const RunConfig& config, std::uint64_t r_max) {
  Sink sink(config);
  std::ostream& out = sink.stream();
  const bool csv = config.format == "csv";
  if (csv) out << "r,beta,beta_brute,beta_over_r2,alpha\n";
  for (std::uint64_t r = 1; r <= r_max; ++r) {
    const BigInt b = torus2::beta(r);
    const BigInt brute = torus2::count_generating_pairs(r, config.enum_cap);
    const Rational ratio = torus2::beta_product_ratio(r);
    std::ostringstream alphas;
    const auto ds = finab::divisors(r);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (i) alphas << ';';
      alphas << ds[i] << ':' << rational_string(torus2::alpha(ds[i], r));
    }
    if (csv) {
      out << r << ',' << b.str() << ',' << brute.str() << ',' << rational_string(ratio) << ",\""
          << alphas.str() << "\"\n";
    } else {
      out << "r=" << r << "  beta=" << b.str() << "  brute=" << brute.str()
          << "  beta/r^2=" << rational_string(ratio) << "  alpha[" << alphas.str() << "]\n";
    }
  }
}

// ---- free ----------------------------------------------------------------

void run_free_schreier(const RunConfig& config, std::uint32_t rank, const std::string& images) {
  const auto perms = parse_permutations(images);
  const auto graph = freegrp::SchreierGraph::build(rank, perms, config.group_cap);
  const auto basis = freegrp::schreier_basis(graph);
  Sink sink(config);
  std::ostream& out = sink.stream();
  out << "index " << graph.index() << '\n';
  out << "basis size " << basis.size() << '\n';
  for (const auto& w : basis) out << w.to_string() << '\n';
}

void run_free_adyan(const RunConfig& config, std::uint32_t n, std::uint64_t p) {
  const auto w = freegrp::adyan_word(n, p);
  Sink sink(config);
  sink.stream() << w.to_string() << '\n' << "length " << w.length() << '\n';
}

void run_free_verbal(const RunConfig& config, const std::string& group,
                     const std::string& words) {
  const auto gens = parse_permutations(group);
  const auto g = freegrp::FinGroup::generated_by(gens, config.group_cap);
  std::uint32_t rank = 1;
  std::vector<std::string> word_texts = split(words, ';');
  // Two passes: ranks must cover the largest index used.
  for (const auto& text : word_texts) {
    const auto probe = freegrp::FreeWord::parse(32, text);
    for (const auto& s : probe.syllables()) rank = std::max(rank, s.gen);
  }
  std::vector<freegrp::FreeWord> parsed;
  parsed.reserve(word_texts.size());
  for (const auto& text : word_texts) parsed.push_back(freegrp::FreeWord::parse(rank, text));
  const auto sub = freegrp::verbal_subgroup(g, parsed, config.enum_cap);
  Sink sink(config);
  std::ostream& out = sink.stream();
  out << "order " << sub.order() << '\n';
  for (const auto& e : sub.elements()) out << e.to_cycle_string() << '\n';
}

}  // namespace

int run_main(int argc, char** argv) {
  RunConfig config;

  CLI::App app{"Exact computations with random subgroup laws at finite truncation"};
  app.require_subcommand(1);
  app.add_option("--seed", config.seed, "RNG seed (64-bit)");
  app.add_option("--format", config.format, "Output format: plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", config.out_path, "Write output to this path instead of stdout");

  // rankdist
  std::uint64_t rd_q = 2;
  std::uint32_t rd_kappa = 1, rd_n = 1;
  bool rd_exact = false;
  std::optional<std::uint64_t> rd_samples;
  auto* rankdist = app.add_subcommand("rankdist", "Intersection-dimension marginal table");
  rankdist->add_option("--q", rd_q, "Field order (prime power)")->required();
  rankdist->add_option("--kappa", rd_kappa, "Number of constraints")->required();
  rankdist->add_option("--n", rd_n, "Truncation dimension")->required();
  rankdist->add_flag("--exact", rd_exact, "Exact table via full enumeration");
  rankdist->add_option("--samples", rd_samples, "Monte Carlo sample count");

  // crs enum/sample/exact/limit
  auto* crs_cmd = app.add_subcommand("crs", "Parameter enumeration, sampling, exact laws");
  crs_cmd->require_subcommand(1);
  std::uint64_t crs_n = 2, crs_max_order = 4, crs_m = 1, crs_samples = 10;
  std::uint32_t crs_coords = 2;
  std::string crs_group = "[]", crs_side = "ker", crs_descriptor;

  auto* crs_enum = crs_cmd->add_subcommand("enum", "List parameters in canonical order");
  crs_enum->add_option("--n", crs_n, "Ambient modulus (0 for the untwisted case)")->required();
  crs_enum->add_option("--max-order", crs_max_order, "Largest group order listed")->required();

  auto* crs_sample = crs_cmd->add_subcommand("sample", "Stream sampled subgroups as JSON lines");
  crs_sample->add_option("--n", crs_n, "Ambient modulus")->required();
  crs_sample->add_option("--m", crs_m, "Multiplier")->required();
  crs_sample->add_option("--group", crs_group, "Group, e.g. \"[2,4]\" or \"Z/2 + Z/4\"")
      ->required();
  crs_sample->add_option("--coords", crs_coords, "Truncation coordinates")->required();
  crs_sample->add_option("--side", crs_side, "ker or ann")->required();
  crs_sample->add_option("--samples", crs_samples, "Number of draws")->required();

  auto* crs_exact = crs_cmd->add_subcommand("exact", "Exact truncated law");
  crs_exact->add_option("--n", crs_n, "Ambient modulus")->required();
  crs_exact->add_option("--m", crs_m, "Multiplier")->required();
  crs_exact->add_option("--group", crs_group, "Group, e.g. \"[2,4]\" or \"Z/2 + Z/4\"")
      ->required();
  crs_exact->add_option("--coords", crs_coords, "Truncation coordinates")->required();
  crs_exact->add_option("--side", crs_side, "ker or ann")->required();

  auto* crs_limit = crs_cmd->add_subcommand("limit", "Classify the limit of a parameter sequence");
  crs_limit->add_option("--descriptor", crs_descriptor, "Sequence descriptor JSON")->required();

  // torus
  auto* torus_cmd = app.add_subcommand("torus", "Torsion-grid measure decomposition");
  torus_cmd->require_subcommand(1);
  std::uint64_t torus_r = 2, torus_r_max = 10;
  auto* torus_decompose = torus_cmd->add_subcommand("decompose", "Pointwise residual for one r");
  torus_decompose->add_option("--r", torus_r, "Torsion level")->required();
  auto* torus_beta = torus_cmd->add_subcommand("beta", "Coefficient table");
  torus_beta->add_option("--r-max", torus_r_max, "Largest torsion level")->required();

  // free
  auto* free_cmd = app.add_subcommand("free", "Free-group tools");
  free_cmd->require_subcommand(1);
  std::uint32_t free_rank = 2, free_n = 1;
  std::uint64_t free_p = 2;
  std::string free_images, free_group, free_words;
  auto* free_schreier = free_cmd->add_subcommand("schreier", "Coset graph and kernel basis");
  free_schreier->add_option("--rank", free_rank, "Free rank")->required();
  free_schreier->add_option("--images", free_images, "Semicolon-separated cycle notation")
      ->required();
  auto* free_adyan = free_cmd->add_subcommand("adyan", "Power-commutator word family");
  free_adyan->add_option("--n", free_n, "Block exponent")->required();
  free_adyan->add_option("--p", free_p, "Prime")->required();
  auto* free_verbal = free_cmd->add_subcommand("verbal", "Word-map image subgroup");
  free_verbal->add_option("--group", free_group, "Generators in cycle notation, ';'-separated")
      ->required();
  free_verbal->add_option("--words", free_words, "Words, ';'-separated")->required();

  try {
    app.parse(argc, argv);
    config.enum_cap = env_cap("CRSLAB_ENUM_CAP", config.enum_cap);
    config.group_cap = env_cap("CRSLAB_GROUP_CAP", config.group_cap);

    if (rankdist->parsed()) {
      run_rankdist(config, rd_q, rd_kappa, rd_n, rd_exact, rd_samples);
    } else if (crs_enum->parsed()) {
      run_crs_enum(config, crs_n, crs_max_order);
    } else if (crs_sample->parsed()) {
      run_crs_sample(config, parse_param(crs_n, crs_m, crs_group), crs_coords,
                     parse_side(crs_side), crs_samples);
    } else if (crs_exact->parsed()) {
      run_crs_exact(config, parse_param(crs_n, crs_m, crs_group), crs_coords,
                    parse_side(crs_side));
    } else if (crs_limit->parsed()) {
      run_crs_limit(config, crs_descriptor);
    } else if (torus_decompose->parsed()) {
      run_torus_decompose(config, torus_r);
    } else if (torus_beta->parsed()) {
      run_torus_beta(config, torus_r_max);
    } else if (free_schreier->parsed()) {
      run_free_schreier(config, free_rank, free_images);
    } else if (free_adyan->parsed()) {
      run_free_adyan(config, free_n, free_p);
    } else if (free_verbal->parsed()) {
      run_free_verbal(config, free_group, free_words);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (...) {
    return 4;
  }
}
