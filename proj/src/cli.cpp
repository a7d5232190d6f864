#include "hofq/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hofq/bfile.hpp"
#include "hofq/detect.hpp"
#include "hofq/harness.hpp"
#include "hofq/quasipoly.hpp"
#include "hofq/recurrence.hpp"

namespace hofq::cli {

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto begin = item.find_first_not_of(" \t");
    const auto end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      throw std::invalid_argument("empty entry in integer list \"" + text + "\"");
    }
    item = item.substr(begin, end - begin + 1);
    if (!item.empty() && item[0] == '+') item.erase(0, 1);
    Integer value;
    const bool digits = !item.empty() && item.find_first_not_of("0123456789", item[0] == '-' ? 1 : 0) ==
                                             std::string::npos && item != "-";
    if (!digits || value.set_str(item, 10) != 0) {
      throw std::invalid_argument("not an integer: \"" + item + "\"");
    }
    values.push_back(std::move(value));
  }
  if (values.empty() || (!text.empty() && text.back() == ',')) {
    throw std::invalid_argument("malformed integer list \"" + text + "\"");
  }
  return values;
}

namespace {

std::vector<long> parse_shifts(const std::string& text) {
  std::vector<long> shifts;
  for (const auto& v : parse_integer_list(text)) {
    if (!v.fits_slong_p()) {
      throw std::invalid_argument("shift out of range: " + v.get_str());
    }
    shifts.push_back(v.get_si());
  }
  return shifts;
}

UnderflowPolicy parse_policy(const std::string& text) {
  if (text == "zero") return UnderflowPolicy::zero_convention;
  if (text == "strict") return UnderflowPolicy::strict;
  throw std::invalid_argument("unknown policy \"" + text + "\" (expected zero or strict)");
}

std::optional<WeightSequence> parse_weights(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return WeightSequence(parse_integer_list(text));
}

/// Writes to the -o file when given, otherwise to the command's out stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        throw std::invalid_argument("cannot open output file \"" + path + "\"");
      }
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// "construct d=3 n=500", "compute init=1,1 n=200 shifts=1,2 policy=zero",
// "golomb n=300".
SequenceBuffer generate(const std::string& spec) {
  std::istringstream words(spec);
  std::string kind;
  words >> kind;
  std::map<std::string, std::string> params;
  std::string word;
  while (words >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("generation spec: expected key=value, got \"" + word + "\"");
    }
    params[word.substr(0, eq)] = word.substr(eq + 1);
  }
  auto take = [&](const std::string& key, std::optional<std::string> fallback = std::nullopt) {
    auto it = params.find(key);
    if (it == params.end()) {
      if (!fallback) throw std::invalid_argument("generation spec: missing " + key + "=");
      return *fallback;
    }
    std::string value = it->second;
    params.erase(it);
    return value;
  };
  auto take_count = [&](const std::string& key) {
    const auto v = parse_integer_list(take(key));
    if (v.size() != 1 || sgn(v[0]) <= 0 || !v[0].fits_ulong_p()) {
      throw std::invalid_argument("generation spec: " + key + " must be a positive integer");
    }
    return static_cast<std::size_t>(v[0].get_ui());
  };

  std::optional<SequenceBuffer> buffer;
  if (kind == "construct") {
    const auto d = parse_integer_list(take("d"));
    if (d.size() != 1 || !d[0].fits_slong_p()) throw std::invalid_argument("generation spec: bad d");
    const std::size_t n = take_count("n");
    buffer = closed_form_buffer(d[0].get_si(), n, parse_weights(take("weights", "")));
  } else if (kind == "compute") {
    const auto init = parse_integer_list(take("init"));
    const std::size_t n = take_count("n");
    const NestedRecurrence recurrence(parse_shifts(take("shifts", "1,2")));
    buffer = compute(recurrence, init, n, parse_policy(take("policy", "zero")));
  } else if (kind == "golomb") {
    buffer = golomb_buffer(take_count("n"));
  } else {
    throw std::invalid_argument("generation spec: unknown kind \"" + kind + "\"");
  }
  if (!params.empty()) {
    throw std::invalid_argument("generation spec: unknown key " + params.begin()->first + "=");
  }
  return std::move(*buffer);
}

void print_report(std::ostream& out, const VerificationReport& report) {
  out << report.subject << ": ";
  if (report.match) {
    out << "match on 1.." << report.range_checked;
  } else {
    const auto& mm = *report.first_mismatch;
    out << "MISMATCH at m=" << mm.index << ", expected " << mm.expected << ", actual " << mm.actual;
  }
  out << ", first_valid_index " << report.first_valid_index << '\n';
}

struct Options {
  // compute
  std::string shifts = "1,2";
  std::string init;
  std::size_t n = 0;
  std::string policy = "zero";
  std::string output;
  // construct / verify theorem
  long d = 0;
  long d_min = 0;
  long d_max = 0;
  std::string weights;
  // verify lemmas
  long k_max = 8;
  long n_max = 200;
  // detect
  std::string input;
  std::string generate;
  std::size_t q_max = 12;
  std::size_t deg_max = 3;
  std::size_t min_confirm = kDefaultMinConfirm;
};

int cmd_compute(const Options& o, std::ostream& out) {
  const NestedRecurrence recurrence(parse_shifts(o.shifts));
  const auto buffer = compute(recurrence, parse_integer_list(o.init), o.n, parse_policy(o.policy));
  OutputTarget target(o.output, out);
  write_bfile(target.stream(), buffer.terms());
  return kSuccess;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const auto buffer = closed_form_buffer(o.d, o.n, parse_weights(o.weights));
  OutputTarget target(o.output, out);
  write_bfile(target.stream(), buffer.terms());
  return kSuccess;
}

int cmd_verify_theorem(const Options& o, std::ostream& out) {
  long lo = o.d_min, hi = o.d_max;
  if (o.d != 0) lo = hi = o.d;
  if (lo < 1 || hi < lo) {
    throw std::invalid_argument("verify theorem: give -d or a range --d-min <= --d-max, all >= 1");
  }
  bool pass = true;
  const auto reports = verify_theorem_sweep(lo, hi, o.n);
  for (long d = lo; d <= hi; ++d) {
    const auto& report = reports[static_cast<std::size_t>(d - lo)];
    print_report(out, report);
    const bool identity_ok = report.first_valid_index <= static_cast<std::size_t>(3 * d + 3);
    if (!identity_ok) {
      out << "  recurrence identity fails beyond the initial condition (first_valid_index > "
          << 3 * d + 3 << ")\n";
    }
    pass = pass && report.match && identity_ok;
  }
  return pass ? kSuccess : kMismatch;
}

int cmd_verify_golomb(const Options& o, std::ostream& out) {
  const auto report = verify_golomb(o.n);
  print_report(out, report);
  return report.match && report.first_valid_index == 4 ? kSuccess : kMismatch;
}

int cmd_verify_lemmas(const Options& o, std::ostream& out) {
  if (o.d_max < 1 || o.k_max < 1 || o.n_max < 1) {
    throw std::invalid_argument("verify lemmas: --d-max, --k-max and --n-max must be >= 1");
  }
  bool pass = true;
  for (long d = 1; d <= o.d_max; ++d) {
    const auto l1 = check_lemma1(d, o.k_max, o.n_max);
    out << "lemma1 d=" << d << ": ";
    if (l1.holds) {
      out << "holds for 0<=k<=" << o.k_max << ", 1<=n<=" << o.n_max << '\n';
    } else {
      const auto& c = *l1.counterexample;
      out << "FAILS at k=" << c.k << " n=" << c.n << ": " << c.lhs << " != " << c.rhs << '\n';
    }
    const auto l2 = check_lemma2(d, o.k_max, o.n_max);
    out << "lemma2 d=" << d << ": ";
    if (l2.holds) {
      out << "holds for 1<=k<=" << o.k_max << ", 0<=n<=" << o.n_max << "; equality at";
      for (const auto& [k, n] : l2.equality_witnesses) {
        out << " (" << k << "," << n << ")";
      }
      out << '\n';
    } else {
      const auto& c = *l2.counterexample;
      out << "FAILS at k=" << c.k << " n=" << c.n << ": " << c.value << " < " << c.bound << '\n';
    }
    pass = pass && l1.holds && l2.holds;
  }
  return pass ? kSuccess : kMismatch;
}

int cmd_verify_wellposed(const Options& o, std::ostream& out) {
  const auto init = parse_integer_list(o.init);
  const auto hit = q_wellposed_scan(init, o.n);
  if (hit) {
    out << "wellposed: a(" << *hit << ") > " << *hit << '\n';
    return kMismatch;
  }
  out << "wellposed: a(n) <= n for every computed n <= " << o.n << '\n';
  return kSuccess;
}

int cmd_detect(const Options& o, std::istream& in, std::ostream& out) {
  if (o.input.empty() == o.generate.empty()) {
    throw std::invalid_argument("detect: give exactly one of --input or --generate");
  }
  std::optional<SequenceBuffer> buffer;
  if (!o.generate.empty()) {
    buffer = generate(o.generate);
  } else if (o.input == "-") {
    buffer.emplace(read_bfile(in), ExplicitProvenance{"stdin"});
  } else {
    std::ifstream file(o.input);
    if (!file) {
      throw std::invalid_argument("cannot open input file \"" + o.input + "\"");
    }
    buffer.emplace(read_bfile(file), ExplicitProvenance{o.input});
  }

  const auto fit = detect(*buffer, o.q_max, o.deg_max, o.min_confirm);
  if (!fit) {
    out << "NotFound: no quasipolynomial structure with period <= " << o.q_max << " and degree <= "
        << o.deg_max << '\n';
    return kNotFound;
  }
  out << "period " << fit->period << ", onset " << fit->onset << '\n';
  for (std::size_t r = 0; r < fit->residue_polys.size(); ++r) {
    out << "p_" << r << " = " << fit->residue_polys[r].to_string() << '\n';
  }
  out << "confirmed " << fit->confirmed << " per class\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hofstadter-type nested recurrences and their quasipolynomial solutions", "hofq"};
  app.require_subcommand(1);
  Options o;

  auto* compute_cmd = app.add_subcommand("compute", "Evaluate a nested recurrence, b-file output");
  compute_cmd->add_option("--shifts", o.shifts, "Comma-separated shifts s_j of a(n - a(n - s_j))")
      ->capture_default_str();
  compute_cmd->add_option("--init", o.init, "Comma-separated initial condition")->required();
  compute_cmd->add_option("-n", o.n, "Number of terms")->required()->check(CLI::PositiveNumber);
  compute_cmd->add_option("--policy", o.policy, "Underflow policy: zero or strict")->capture_default_str();
  compute_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* construct_cmd = app.add_subcommand("construct", "Closed-form degree-d solution, b-file output");
  construct_cmd->add_option("-d", o.d, "Degree parameter d >= 1")->required();
  construct_cmd->add_option("-n", o.n, "Number of terms")->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--weights", o.weights, "Comma-separated weights w_1,... (each w_i >= 3i+2)");
  construct_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Verification campaigns");
  verify_cmd->require_subcommand(1);
  auto* theorem_cmd = verify_cmd->add_subcommand("theorem", "Engine vs closed form for each d");
  theorem_cmd->add_option("-d", o.d, "Single degree parameter");
  theorem_cmd->add_option("--d-min", o.d_min, "First d of a sweep");
  theorem_cmd->add_option("--d-max", o.d_max, "Last d of a sweep");
  theorem_cmd->add_option("-n", o.n, "Terms to compare")->required();
  auto* golomb_cmd = verify_cmd->add_subcommand("golomb", "Engine vs Golomb's quasilinear solution");
  golomb_cmd->add_option("-n", o.n, "Terms to compare")->required();
  auto* lemmas_cmd = verify_cmd->add_subcommand("lemmas", "Exhaustive checks of the p_{d,k} lemmas");
  lemmas_cmd->add_option("--d-max", o.d_max, "Largest d")->required();
  lemmas_cmd->add_option("--k-max", o.k_max, "Largest k")->capture_default_str();
  lemmas_cmd->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
  auto* wellposed_cmd = verify_cmd->add_subcommand("wellposed", "Scan for a(n) > n under the Q-recurrence");
  wellposed_cmd->add_option("--init", o.init, "Comma-separated initial condition (default 1,1)");
  wellposed_cmd->add_option("-n", o.n, "Scan bound")->required();

  auto* detect_cmd = app.add_subcommand("detect", "Find eventual quasipolynomial structure");
  detect_cmd->add_option("--input", o.input, "b-file to analyse ('-' for stdin)");
  detect_cmd->add_option("--generate", o.generate,
                         "Generation spec, e.g. \"construct d=3 n=500\" or \"compute init=1,1 n=200\"");
  detect_cmd->add_option("--q-max", o.q_max, "Largest period")->capture_default_str()->check(CLI::PositiveNumber);
  detect_cmd->add_option("--deg-max", o.deg_max, "Largest degree per class")->capture_default_str();
  detect_cmd->add_option("--min-confirm", o.min_confirm, "Confirmations required per class")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "hofq: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*compute_cmd) return cmd_compute(o, out);
    if (*construct_cmd) return cmd_construct(o, out);
    if (*theorem_cmd) return cmd_verify_theorem(o, out);
    if (*golomb_cmd) return cmd_verify_golomb(o, out);
    if (*lemmas_cmd) return cmd_verify_lemmas(o, out);
    if (*wellposed_cmd) {
      if (o.init.empty()) o.init = "1,1";
      return cmd_verify_wellposed(o, out);
    }
    if (*detect_cmd) return cmd_detect(o, in, out);
  } catch (const UnderflowError& e) {
    err << "hofq: " << e.what() << '\n';
    return kUnderflow;
  } catch (const ForwardReferenceError& e) {
    err << "hofq: " << e.what() << '\n';
    return kForwardReference;
  } catch (const BFileParseError& e) {
    err << "hofq: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "hofq: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hofq::cli
