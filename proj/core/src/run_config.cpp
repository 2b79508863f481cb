#include "geovqe/run_config.hpp"

#include <fstream>
#include <sstream>

#include "geovqe/errors.hpp"
#include "geovqe/text.hpp"

namespace geovqe {

namespace {

std::string at_line(std::string_view origin, int line) {
  return std::string(origin) + ":" + std::to_string(line);
}

void expect_one_value(const std::vector<std::string_view>& tokens,
                      std::string_view context) {
  if (tokens.size() != 2)
    throw ValidationError(std::string(context) + ": key '" + std::string(tokens[0]) +
                          "' takes exactly one value");
}

}  // namespace

LoadedConfig parse_run_config_text(std::string_view text, std::string_view origin) {
  LoadedConfig cfg;
  std::string section;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const std::string ctx = at_line(origin, line_no);

    if (tokens[0].front() == '[') {
      if (tokens.size() != 1 || tokens[0].back() != ']')
        throw ValidationError(ctx + ": malformed section header");
      section = std::string(tokens[0].substr(1, tokens[0].size() - 2));
      if (section != "run" && section != "pool" && section != "hamiltonian" &&
          section != "sweep" && section != "output")
        throw ValidationError(ctx + ": unknown section [" + section + "]");
      continue;
    }
    if (section.empty())
      throw ValidationError(ctx + ": key before any [section] header");

    const std::string_view key = tokens[0];
    if (section == "run") {
      expect_one_value(tokens, ctx);
      const std::string_view value = tokens[1];
      if (key == "algorithm") {
        const auto a = algorithm_from_name(value);
        if (!a)
          throw ValidationError(ctx + ": unknown algorithm '" + std::string(value) +
                                "'");
        cfg.run.algorithm = *a;
      } else if (key == "eta") {
        cfg.run.eta = parse_double_token(value, ctx);
      } else if (key == "kappa") {
        cfg.run.kappa = static_cast<int>(parse_int_token(value, ctx));
      } else if (key == "eps") {
        cfg.run.eps = parse_double_token(value, ctx);
      } else if (key == "max_outer") {
        cfg.run.max_outer = static_cast<int>(parse_int_token(value, ctx));
      } else if (key == "reg") {
        cfg.run.reg = parse_double_token(value, ctx);
      } else if (key == "seed") {
        cfg.run.seed = static_cast<std::uint64_t>(parse_int_token(value, ctx));
      } else if (key == "tie_break") {
        if (value != "lowest_index")
          throw ValidationError(ctx + ": tie_break supports only 'lowest_index'");
      } else if (key == "inner") {
        if (value == "by_algorithm") cfg.run.inner = InnerOpt::by_algorithm;
        else if (value == "gd") cfg.run.inner = InnerOpt::gd;
        else if (value == "qngd") cfg.run.inner = InnerOpt::qngd;
        else throw ValidationError(ctx + ": inner must be by_algorithm|gd|qngd");
      } else if (key == "selection_metric") {
        if (value == "by_algorithm")
          cfg.run.selection_metric = SelectionMetric::by_algorithm;
        else if (value == "pool") cfg.run.selection_metric = SelectionMetric::pool;
        else if (value == "identity")
          cfg.run.selection_metric = SelectionMetric::identity;
        else
          throw ValidationError(ctx +
                                ": selection_metric must be by_algorithm|pool|identity");
      } else {
        throw ValidationError(ctx + ": unknown key '" + std::string(key) + "' in [run]");
      }
    } else if (section == "pool") {
      expect_one_value(tokens, ctx);
      if (key == "spin_conserving")
        cfg.run.pool.spin_conserving = parse_bool_token(tokens[1], ctx);
      else
        throw ValidationError(ctx + ": unknown key '" + std::string(key) +
                              "' in [pool]");
    } else if (section == "hamiltonian") {
      expect_one_value(tokens, ctx);
      if (key == "source")
        cfg.hamiltonian_source = std::string(tokens[1]);
      else
        throw ValidationError(ctx + ": unknown key '" + std::string(key) +
                              "' in [hamiltonian]");
    } else if (section == "sweep") {
      if (tokens.size() < 2)
        throw ValidationError(ctx + ": sweep key '" + std::string(key) +
                              "' needs at least one value");
      if (key == "eta") {
        for (std::size_t i = 1; i < tokens.size(); ++i)
          cfg.sweep_eta.push_back(parse_double_token(tokens[i], ctx));
      } else if (key == "kappa") {
        for (std::size_t i = 1; i < tokens.size(); ++i)
          cfg.sweep_kappa.push_back(static_cast<int>(parse_int_token(tokens[i], ctx)));
      } else {
        throw ValidationError(ctx + ": unknown key '" + std::string(key) +
                              "' in [sweep]");
      }
    } else {  // output
      expect_one_value(tokens, ctx);
      if (key == "dir")
        cfg.out_dir = std::string(tokens[1]);
      else if (key == "svg")
        cfg.svg = parse_bool_token(tokens[1], ctx);
      else
        throw ValidationError(ctx + ": unknown key '" + std::string(key) +
                              "' in [output]");
    }
  }

  cfg.run.validate();
  return cfg;
}

LoadedConfig parse_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read error on config file: " + path.string());
  return parse_run_config_text(buf.str(), path.string());
}

}  // namespace geovqe
