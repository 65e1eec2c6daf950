// mscodes: command-line front end. Every subcommand prints the JSON (or CSV)
// document produced by the matching mscodes::commands function.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mscodes/mscodes.hpp>

namespace {

namespace cmd = mscodes::commands;
using mscodes::count_t;

constexpr int kOk = 0;
constexpr int kParameterError = 1;
constexpr int kInternalError = 2;

std::string read_stdin() {
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

std::uint64_t cap_from_env() {
  const char* raw = std::getenv("MSCODES_ENUM_CAP");
  if (!raw || !*raw) return mscodes::kDefaultEnumerationCap;
  const auto v = mscodes::bigint_from_text(raw);
  const auto small = mscodes::to_u64(v);
  if (!small || *small == 0) throw mscodes::invalid_parameter("MSCODES_ENUM_CAP must be a positive 64-bit integer");
  return *small;
}

std::optional<std::uint64_t> parse_residue(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  const auto v = mscodes::to_u64(mscodes::bigint_from_text(text));
  if (!v) throw mscodes::invalid_parameter("residue does not fit in 64 bits");
  return v;
}

struct CodeFlags {
  std::string kind;
  count_t n = 0;
  std::optional<std::size_t> q;
  std::optional<count_t> t;
  std::string a = "auto";

  void attach(CLI::App* sub) {
    sub->add_option("--kind", kind, "binary | summod | cyclic | ternary | parity")->required();
    sub->add_option("--n", n, "cardinality")->required();
    sub->add_option("--q", q, "alphabet size");
    sub->add_option("--t", t, "deletions corrected");
    sub->add_option("--a", a, "residue, or 'auto' for the largest class");
  }

  cmd::CodeSpec spec() const { return {kind, n, q, t, parse_residue(a)}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiset deletion-correcting codes: bounds, constructions, search and channel checks"};
  app.require_subcommand(0, 1);

  std::string format = "json";
  bool show_version = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--version", show_version, "print library and output-format versions");

  std::function<mscodes::Json()> action;

  count_t n = 0, t = 0;
  std::size_t q = 0;

  auto* bounds = app.add_subcommand("bounds", "upper bounds on the optimal code size");
  bool all = false;
  bounds->add_option("--n", n)->required();
  bounds->add_option("--q", q)->required();
  bounds->add_option("--t", t)->required();
  bounds->add_flag("--all", all, "also list inapplicable bounds");
  bounds->callback([&] { action = [&] { return cmd::bounds(n, q, t, all); }; });

  CodeFlags code;
  auto* construct = app.add_subcommand("construct", "describe a congruence or parity code");
  code.attach(construct);
  construct->callback([&] { action = [&] { return cmd::construct(code.spec()); }; });

  auto* encode = app.add_subcommand("encode", "message index to codeword");
  std::string index_text;
  code.attach(encode);
  encode->add_option("--index", index_text, "message index (read from stdin if absent)");
  encode->callback([&] {
    action = [&] {
      return cmd::encode(code.spec(), mscodes::bigint_from_text(index_text.empty() ? read_stdin() : index_text));
    };
  });

  auto* decode = app.add_subcommand("decode", "received word to codeword and deletion pattern");
  std::string word_text;
  code.attach(decode);
  decode->add_option("--word", word_text, "received counts as a JSON array (read from stdin if absent)");
  decode->callback([&] {
    action = [&] {
      const auto spec = code.spec();
      return cmd::decode(spec, mscodes::word_from_text(word_text.empty() ? read_stdin() : word_text, spec.q));
    };
  });

  auto* sidon = app.add_subcommand("sidon", "brute-force B_t set check in Z_g");
  std::uint64_t g = 0;
  std::vector<std::uint64_t> elements;
  sidon->add_option("--g", g, "group modulus")->required();
  sidon->add_option("--elements", elements, "residues of the candidate set")->required();
  sidon->add_option("--t", t)->required();
  sidon->callback([&] { action = [&] { return cmd::sidon(g, elements, t, cap_from_env()); }; });

  auto* search = app.add_subcommand("search", "exact optimum by maximum independent set");
  std::uint64_t vertex_cap = mscodes::SearchOptions{}.vertex_cap;
  bool witness = false;
  search->add_option("--n", n)->required();
  search->add_option("--q", q)->required();
  search->add_option("--t", t)->required();
  search->add_option("--cap", vertex_cap, "vertex cap for the exact search");
  search->add_flag("--emit-witness", witness, "include an optimal code");
  search->callback([&] { action = [&] { return cmd::search(n, q, t, vertex_cap, witness); }; });

  auto* simulate = app.add_subcommand("simulate", "encode, delete, decode round trips");
  cmd::SimulateOptions sim;
  std::string mode = "exhaustive";
  std::optional<count_t> t_max;
  code.attach(simulate);
  simulate->add_option("--mode", mode, "every pattern, or sampled trials")->capture_default_str()->check(CLI::IsMember({"exhaustive", "random"}));
  simulate->add_option("--t-max", t_max, "deletions applied (defaults to the code's t)");
  simulate->add_option("--seed", sim.seed, "random mode seed");
  simulate->add_option("--trials", sim.trials, "random mode trial count");
  simulate->add_option("--workers", sim.workers, "worker threads; output does not depend on it");
  simulate->callback([&] {
    action = [&] {
      sim.mode = mode == "random" ? mscodes::ChannelMode::random : mscodes::ChannelMode::exhaustive;
      sim.t_max = t_max;
      sim.cap = cap_from_env();
      return cmd::simulate(code.spec(), sim);
    };
  });

  auto* verify = app.add_subcommand("verify", "check an explicit code (JSON on stdin or --code)");
  std::string code_text;
  std::optional<count_t> verify_t;
  verify->add_option("--code", code_text, "{\"t\":..,\"words\":[..]} or a list of words");
  verify->add_option("--t", verify_t);
  verify->callback([&] {
    action = [&] {
      mscodes::Json doc;
      try {
        doc = mscodes::Json::parse(code_text.empty() ? read_stdin() : code_text);
      } catch (const mscodes::Json::parse_error& e) {
        throw mscodes::invalid_parameter(std::string("code is not valid JSON: ") + e.what());
      }
      return cmd::verify(doc, verify_t, cap_from_env());
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kParameterError;
  }

  const auto fmt = format == "csv" ? cmd::Format::csv : cmd::Format::json;
  try {
    if (show_version) {
      std::cout << cmd::render(cmd::version(), fmt);
      return kOk;
    }
    if (!action) {
      std::cerr << app.help();
      return kParameterError;
    }
    const auto doc = action();
    std::cout << cmd::render(doc, fmt);
    return kOk;
  } catch (const mscodes::parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParameterError;
  } catch (const mscodes::too_many_deletions& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParameterError;
  } catch (const mscodes::decode_failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParameterError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  }
}
