#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bperm/bijections.hpp"
#include "bperm/counting.hpp"
#include "bperm/enumeration.hpp"
#include "bperm/errors.hpp"
#include "bperm/notation.hpp"
#include "bperm/parallel_count.hpp"
#include "bperm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr int kBruteGuard = 9;

void check_brute_guard(int n, bool force) {
  if (n > kBruteGuard && !force)
    throw bperm::size_guard_error("n = " + std::to_string(n) + " exceeds the brute-force guard (" +
                                  std::to_string(kBruteGuard) + "); pass --force to override");
}

struct CountArgs {
  std::string family;
  int n = 0;
  std::string method = "formula";
  bool json = false;
  bool force = false;
};

bperm::Count dispatch_count(const CountArgs& args) {
  using bperm::Count;
  const std::string& fam = args.family;
  if (args.method == "formula") {
    if (fam == "db") return bperm::count_derangements_b(args.n);
    if (fam == "qb") return bperm::count_relative_derangements_b(args.n);
    if (fam == "d") return bperm::count_derangements_classical(args.n);
    return bperm::count_relative_classical(args.n);
  }
  if (args.method == "identity") {
    if (fam == "qb") return bperm::count_relative_via_identity(args.n);
    if (fam == "q") return bperm::count_relative_classical(args.n);
    throw bperm::precondition_error("--method identity applies to the relative families qb and q");
  }
  // brute
  check_brute_guard(args.n, args.force);
  if (fam == "db")
    return Count(bperm::parallel_filtered_count(args.n, bperm::StreamFilter::DerangementB, 1));
  if (fam == "qb")
    return Count(
        bperm::parallel_filtered_count(args.n, bperm::StreamFilter::RelativeDerangementB, 1));
  const bperm::BruteOptions opts{.force = args.force};
  return bperm::classical_brute_count(args.n, fam == "q", opts);
}

int cmd_count(const CountArgs& args) {
  const bperm::Count count = dispatch_count(args);
  if (args.json) {
    nlohmann::json out{{"family", args.family},
                       {"n", args.n},
                       {"method", args.method},
                       {"count", count.str()}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << count << '\n';
  }
  return kExitOk;
}

struct EnumerateArgs {
  std::string family;
  int n = 0;
  std::optional<std::uint64_t> limit;
  bool json = false;
  bool force = false;
};

int cmd_enumerate(const EnumerateArgs& args) {
  check_brute_guard(args.n, args.force);
  const bool reps = args.family == "reps";
  bool (*filter)(const bperm::SignedPermutation&) = nullptr;
  if (args.family == "db") filter = bperm::is_derangement_b;
  if (args.family == "qb") filter = bperm::is_relative_derangement_b;
  if (reps) filter = bperm::is_valid_representation;

  nlohmann::json items = nlohmann::json::array();
  std::uint64_t emitted = 0;
  for (bperm::SignedPermutationCursor cursor(args.n, reps ? 0 : 1); !cursor.done();
       cursor.advance()) {
    if (args.limit && emitted >= *args.limit) break;
    const bperm::SignedPermutation p = cursor.current();
    if (filter != nullptr && !filter(p)) continue;
    ++emitted;
    if (args.json)
      items.push_back(bperm::to_json(p));
    else
      std::cout << bperm::format(p) << '\n';
  }
  if (args.json) std::cout << items.dump() << '\n';
  return kExitOk;
}

struct MapArgs {
  std::string direction;
  std::string input;
  std::string tag;
  bool json = false;
};

int cmd_map(const MapArgs& args) {
  using namespace bperm;
  if (args.direction == "rel2skew") {
    const SignedPermutation p = parse_permutation(args.input, 1);
    const SkewDerangement f = rel_to_skew(p);
    const Representation r = representation_of(f);
    if (args.json) {
      nlohmann::json out{{"pairs", to_json(f)}, {"representation", to_json(r.perm())}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << format(f) << "representation: " << format(r.perm()) << '\n';
    }
    return kExitOk;
  }
  if (args.direction == "skew2rel") {
    const Representation r{parse_permutation(args.input, 0)};
    const SignedPermutation p = skew_to_rel(from_representation(r));
    if (args.json)
      std::cout << nlohmann::json{{"perm", to_json(p)}}.dump() << '\n';
    else
      std::cout << format(p) << '\n';
    return kExitOk;
  }
  if (args.direction == "rel2der") {
    const SignedPermutation p = parse_permutation(args.input, 1);
    const TaggedDerangement d = theorem13_forward(p);
    const std::string tag = d.tag == DerangementTag::small ? "small" : "large";
    if (args.json)
      std::cout << nlohmann::json{{"tag", tag}, {"perm", to_json(d.perm)}}.dump() << '\n';
    else
      std::cout << "tag: " << tag << '\n' << format(d.perm) << '\n';
    return kExitOk;
  }
  // der2rel
  if (args.tag != "small" && args.tag != "large")
    throw precondition_error("map der2rel requires --tag small or --tag large");
  const TaggedDerangement d{args.tag == "small" ? DerangementTag::small : DerangementTag::large,
                            parse_permutation(args.input, 1)};
  const SignedPermutation p = theorem13_backward(d);
  if (args.json)
    std::cout << nlohmann::json{{"perm", to_json(p)}}.dump() << '\n';
  else
    std::cout << format(p) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string identity;
  int from = 1;
  int to = 1;
  bool json = false;
  bool force = false;
};

int cmd_verify(const VerifyArgs& args) {
  const bperm::VerificationReport report =
      bperm::run_verification(args.identity, args.from, args.to, args.force);
  if (args.json)
    std::cout << bperm::to_json(report).dump() << '\n';
  else
    std::cout << bperm::render_text(report);
  return report.overall ? kExitOk : kExitVerifyFailed;
}

struct TableArgs {
  int from = 1;
  int to = 1;
  bool json = false;
};

int cmd_table(const TableArgs& args) {
  if (args.from < 1) throw bperm::precondition_error("table: range must start at n >= 1");
  if (args.to < args.from) throw bperm::precondition_error("table: empty range (to < from)");
  nlohmann::json rows = nlohmann::json::array();
  if (!args.json) std::cout << "n\tD_n^B\tQ_n^B\tD_n\tQ_n\n";
  for (int n = args.from; n <= args.to; ++n) {
    const bperm::Count db = bperm::count_derangements_b(n);
    const bperm::Count qb = bperm::count_relative_derangements_b(n);
    const bperm::Count d = bperm::count_derangements_classical(n);
    const bperm::Count q = bperm::count_relative_classical(n);
    if (args.json)
      rows.push_back(nlohmann::json{
          {"n", n}, {"db", db.str()}, {"qb", qb.str()}, {"d", d.str()}, {"q", q.str()}});
    else
      std::cout << n << '\t' << db << '\t' << qb << '\t' << d << '\t' << q << '\n';
  }
  if (args.json) std::cout << rows.dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derangements and relative derangements of type B: exact counts, "
               "enumeration, and the constructive bijections between them"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "print an exact count");
  count->add_option("family", count_args.family, "db | qb | d | q")
      ->required()
      ->check(CLI::IsMember({"db", "qb", "d", "q"}));
  count->add_option("n", count_args.n, "size of the ground set")->required();
  count->add_option("--method", count_args.method, "formula | brute | identity")
      ->check(CLI::IsMember({"formula", "brute", "identity"}));
  count->add_flag("--json", count_args.json, "emit JSON");
  count->add_flag("--force", count_args.force, "override the brute-force size guard");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "stream members of a family");
  enumerate->add_option("family", enum_args.family, "all | db | qb | reps")
      ->required()
      ->check(CLI::IsMember({"all", "db", "qb", "reps"}));
  enumerate->add_option("n", enum_args.n, "size of the ground set")->required();
  std::uint64_t limit_value = 0;
  auto* limit_opt = enumerate->add_option("--limit", limit_value, "stop after this many items");
  enumerate->add_flag("--json", enum_args.json, "emit a JSON array");
  enumerate->add_flag("--force", enum_args.force, "override the size guard");

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "apply a bijection to one object");
  map->add_option("direction", map_args.direction, "rel2skew | skew2rel | rel2der | der2rel")
      ->required()
      ->check(CLI::IsMember({"rel2skew", "skew2rel", "rel2der", "der2rel"}));
  map->add_option("input", map_args.input, "object in compact notation")->required();
  map->add_option("--tag", map_args.tag, "small | large (der2rel only)")
      ->check(CLI::IsMember({"small", "large"}));
  map->add_flag("--json", map_args.json, "emit JSON");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check an identity over a range of n");
  verify
      ->add_option("identity", verify_args.identity,
                   "eq4 | eq5-vs-brute | roundtrip | partition | classical")
      ->required()
      ->check(CLI::IsMember({"eq4", "eq5-vs-brute", "roundtrip", "partition", "classical"}));
  verify->add_option("--from", verify_args.from, "first n")->required();
  verify->add_option("--to", verify_args.to, "last n")->required();
  verify->add_flag("--json", verify_args.json, "emit JSON");
  verify->add_flag("--force", verify_args.force, "override the size guard");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "print D_n^B, Q_n^B, D_n, Q_n over a range");
  table->add_option("--from", table_args.from, "first n")->required();
  table->add_option("--to", table_args.to, "last n")->required();
  table->add_flag("--json", table_args.json, "emit a JSON array");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      if (count_args.n < 0) throw bperm::precondition_error("count: n must be >= 0");
      return cmd_count(count_args);
    }
    if (enumerate->parsed()) {
      if (enum_args.n < 0) throw bperm::precondition_error("enumerate: n must be >= 0");
      if (limit_opt->count() > 0) enum_args.limit = limit_value;
      return cmd_enumerate(enum_args);
    }
    if (map->parsed()) return cmd_map(map_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    return cmd_table(table_args);
  } catch (const bperm::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}
