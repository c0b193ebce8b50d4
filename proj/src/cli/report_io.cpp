#include <sstream>
#include <stdexcept>

#include <fmt/core.h>
#include "json.hpp"

#include "qswitch/cli.hpp"
#include "qswitch/sweep.hpp"

namespace qswitch::cli {

using nlohmann::json;

std::string to_json(const RunReport& r) {
  json j;
  j["command"] = "run";
  j["params"] = {{"omega_z", r.omega_z}, {"chi_ma", r.chi_ma}, {"chi_nb", r.chi_nb},
                 {"chi_mb", r.chi_mb},   {"t", r.t},           {"initial", r.initial}};
  j["sign"] = r.sign;
  j["probability"] = r.probability;
  j["reduced_state"] = {{"re", r.state_re}, {"im", r.state_im}};
  j["concurrence"] = r.concurrence;
  j["checks"] = r.checks;
  return j.dump(2) + "\n";
}

RunReport run_report_from_json(std::string_view text) {
  const json j = json::parse(text);
  RunReport r;
  const auto& p = j.at("params");
  r.omega_z = p.at("omega_z").get<double>();
  r.chi_ma = p.at("chi_ma").get<double>();
  r.chi_nb = p.at("chi_nb").get<double>();
  r.chi_mb = p.at("chi_mb").get<double>();
  r.t = p.at("t").get<double>();
  r.initial = p.at("initial").get<std::string>();
  r.sign = j.at("sign").get<std::string>();
  r.probability = j.at("probability").get<double>();
  r.state_re = j.at("reduced_state").at("re").get<std::vector<double>>();
  r.state_im = j.at("reduced_state").at("im").get<std::vector<double>>();
  r.concurrence = j.at("concurrence").get<double>();
  r.checks = j.at("checks").get<std::map<std::string, bool>>();
  return r;
}

std::string to_text(const RunReport& r) {
  std::string s;
  auto line = [&](std::string_view key, const std::string& value) { s += fmt::format("{:<12} {}\n", key, value); };
  line("omega_z", format_double(r.omega_z));
  line("chi_ma", format_double(r.chi_ma));
  line("chi_nb", format_double(r.chi_nb));
  line("chi_mb", format_double(r.chi_mb));
  line("t", format_double(r.t));
  line("initial", r.initial);
  line("sign", r.sign);
  line("probability", format_double(r.probability));
  line("concurrence", format_double(r.concurrence));
  s += "state\n";
  const std::size_t dim = 4;
  for (std::size_t i = 0; i < dim; ++i) {
    s += " ";
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t k = i * dim + j;
      s += fmt::format(" {:>24} {:>24}", format_double(r.state_re.at(k)), format_double(r.state_im.at(k)));
    }
    s += "\n";
  }
  for (const auto& [name, ok] : r.checks) line("check", fmt::format("{} {}", name, ok ? "pass" : "fail"));
  return s;
}

RunReport run_report_from_text(std::string_view text) {
  RunReport r;
  std::istringstream in{std::string(text)};
  std::string key;
  auto number = [&](double& dst) {
    std::string v;
    in >> v;
    dst = std::stod(v);
  };
  while (in >> key) {
    if (key == "omega_z") number(r.omega_z);
    else if (key == "chi_ma") number(r.chi_ma);
    else if (key == "chi_nb") number(r.chi_nb);
    else if (key == "chi_mb") number(r.chi_mb);
    else if (key == "t") number(r.t);
    else if (key == "initial") in >> r.initial;
    else if (key == "sign") in >> r.sign;
    else if (key == "probability") number(r.probability);
    else if (key == "concurrence") number(r.concurrence);
    else if (key == "state") {
      r.state_re.resize(16);
      r.state_im.resize(16);
      for (std::size_t k = 0; k < 16; ++k) {
        number(r.state_re[k]);
        number(r.state_im[k]);
      }
    } else if (key == "check") {
      std::string name, verdict;
      in >> name >> verdict;
      r.checks[name] = verdict == "pass";
    } else {
      throw std::runtime_error("run report: unexpected key '" + key + "'");
    }
  }
  return r;
}

}  // namespace qswitch::cli
