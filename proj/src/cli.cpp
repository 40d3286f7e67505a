#include "wf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "wf/chains.hpp"
#include "wf/examples.hpp"
#include "wf/ordinal.hpp"
#include "wf/power.hpp"
#include "wf/properties.hpp"

namespace wf {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<Nat>& l) {
  std::string out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(l[i]);
  }
  return out;
}

// Writes one result: a line of text, or the JSON object.
struct Printer {
  const CliConfig& config;
  std::ostream& out;

  void emit(const std::string& text, const Json& json) const {
    if (config.json) {
      out << json.dump() << "\n";
    } else {
      out << text << "\n";
    }
  }
};

int cmd_ord_compare(const CliConfig& config, const Printer& p, const std::string& a, const std::string& b) {
  const Ordinal x = parse_ordinal(a, config.depth);
  const Ordinal y = parse_ordinal(b, config.depth);
  const std::string r = to_string(compare(x, y));
  p.emit(r, Json{{"result", r}});
  return kExitOk;
}

int cmd_ord_normalize(const CliConfig& config, const Printer& p, const std::string& a) {
  const std::string r = print(parse_ordinal(a, config.depth));
  p.emit(r, Json{{"result", r}});
  return kExitOk;
}

int cmd_pow_compare(const Printer& p, const std::string& a, const std::string& b) {
  const auto x = descending_nat_list(parse_nat_list(a));
  const auto y = descending_nat_list(parse_nat_list(b));
  const auto rel = pow_relation(nat_less());
  const std::string r = x == y             ? "EQ"
                        : rel.relates(x, y) ? "LT"
                        : rel.relates(y, x) ? "GT"
                                            : "INCOMPARABLE";
  p.emit(r, Json{{"result", r}});
  return kExitOk;
}

int cmd_chain(const CliConfig& config, const Printer& p, std::ostream& err, const std::string& order_name,
              const std::string& start) {
  const auto order = parse_chain_order(order_name);
  if (!order) throw InputError("unknown order '" + order_name + "'");
  const Chain c = run_chain(*order, start, config.seed, config.max_steps);
  if (config.json) {
    Json j{{"order", to_string(c.order)},
           {"seed", config.seed},
           {"chain", c.elements},
           {"length", c.elements.size()},
           {"exhausted", c.exhausted}};
    j["bound"] = c.bound ? Json(*c.bound) : Json(nullptr);
    p.out << j.dump() << "\n";
  } else {
    for (const auto& e : c.elements) p.out << e << "\n";
    p.out << "length " << c.elements.size() << "\n";
  }
  if (c.exhausted) {
    err << "error: step budget of " << config.max_steps << " exhausted\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_demo_quicksort(const Printer& p, const std::string& list) {
  const auto sorted = quicksort([](Nat a, Nat b) { return a <= b; }, parse_nat_list(list));
  p.emit(join(sorted), Json{{"result", sorted}});
  return kExitOk;
}

int cmd_demo_number(const Printer& p, Nat value) {
  p.emit(std::to_string(value), Json{{"result", value}});
  return kExitOk;
}

int cmd_check(const CliConfig& config, const Printer& p) {
  const auto suites = run_property_suites(config.seed);
  bool all = true;
  Json js = Json::array();
  for (const auto& s : suites) {
    Json props = Json::array();
    for (const auto& r : s.results) {
      all = all && r.passed;
      props.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
      if (!config.json) {
        p.out << (r.passed ? "PASS " : "FAIL ") << s.name << ": " << r.name;
        if (!r.passed) p.out << ": " << r.detail;
        p.out << "\n";
      }
    }
    js.push_back({{"name", s.name}, {"passed", s.passed()}, {"properties", props}});
  }
  if (config.json) {
    p.out << Json{{"passed", all}, {"suites", js}}.dump() << "\n";
  } else {
    p.out << (all ? "all properties passed" : "some properties failed") << "\n";
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Well-founded relations: ordinals, power lists, descents and demos", "wfrec"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", config.json, "Print JSON instead of text");
  app.add_option("--seed", config.seed, "Seed for random descents and the check suites")->capture_default_str();
  app.add_option("--max-steps", config.max_steps, "Longest chain before giving up")->capture_default_str();
  app.add_option("--depth", config.depth, "Nesting limit for ordinal notations")->capture_default_str();

  std::function<int()> action;
  std::string a, b, c;
  Nat m = 0, n = 0;

  auto* ord = app.add_subcommand("ord", "Ordinal notations below epsilon_0")->require_subcommand(1);
  auto* ord_compare = ord->add_subcommand("compare", "Print LT, EQ or GT");
  ord_compare->add_option("a", a)->required();
  ord_compare->add_option("b", b)->required();
  ord_compare->callback([&] { action = [&] { return cmd_ord_compare(config, Printer{config, out}, a, b); }; });
  auto* ord_normalize = ord->add_subcommand("normalize", "Print the Cantor normal form");
  ord_normalize->add_option("a", a)->required();
  ord_normalize->callback([&] { action = [&] { return cmd_ord_normalize(config, Printer{config, out}, a); }; });

  auto* pow = app.add_subcommand("pow", "Descending lists of naturals")->require_subcommand(1);
  auto* pow_compare = pow->add_subcommand("compare", "Compare two comma-separated descending lists");
  pow_compare->add_option("a", a)->required();
  pow_compare->add_option("b", b)->required();
  pow_compare->callback([&] { action = [&] { return cmd_pow_compare(Printer{config, out}, a, b); }; });

  auto* chain = app.add_subcommand("chain", "Random descending chain in a named order");
  chain->add_option("order", a, "nat, pow-nat, multiset-nat or ord")->required();
  chain->add_option("start", b)->required();
  chain->callback([&] { action = [&] { return cmd_chain(config, Printer{config, out}, err, a, b); }; });

  auto* demo = app.add_subcommand("demo", "Programs defined by well-founded recursion")->require_subcommand(1);
  auto* quick = demo->add_subcommand("quicksort", "Sort a comma-separated list");
  quick->add_option("list", c)->required();
  quick->callback([&] { action = [&] { return cmd_demo_quicksort(Printer{config, out}, c); }; });
  auto* ack = demo->add_subcommand("ackermann", "Ackermann function");
  ack->add_option("m", m)->required();
  ack->add_option("n", n)->required();
  ack->callback([&] { action = [&] { return cmd_demo_number(Printer{config, out}, ackermann(m, n)); }; });
  auto* fib = demo->add_subcommand("fib", "Fibonacci by course-of-values recursion");
  fib->add_option("n", n)->required();
  fib->callback([&] { action = [&] { return cmd_demo_number(Printer{config, out}, fib_cov(n)); }; });

  app.add_subcommand("check", "Run every property suite")->callback([&] {
    action = [&] { return cmd_check(config, Printer{config, out}); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParseError;
  }
  for (const auto* sub : app.get_subcommands()) config.subcommand = sub->get_name();

  auto fail = [&](int code, const std::string& what) {
    if (config.json) out << Json{{"error", what}, {"exit", code}}.dump() << "\n";
    err << "error: " << what << "\n";
    return code;
  };
  try {
    return action();
  } catch (const ParseError& e) {
    return fail(kExitParseError, e.what());
  } catch (const InputError& e) {
    return fail(kExitInputError, e.what());
  } catch (const DepthBudgetExceeded& e) {
    return fail(kExitFailure, e.what());
  } catch (const ValueBudgetExceeded& e) {
    return fail(kExitFailure, e.what());
  } catch (const std::exception& e) {
    return fail(kExitInputError, e.what());
  }
}

}  // namespace wf
