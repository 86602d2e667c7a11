#include "dubovsky/csv.hpp"

#include <fstream>
#include <sstream>

#include "dubovsky/errors.hpp"
#include "dubovsky/numfmt.hpp"

namespace dubovsky {

std::string format_csv(const Trajectory& traj) {
  std::string out = "t,x,y\n";
  out.reserve(out.size() + traj.size() * 64);
  for (std::size_t j = 0; j < traj.size(); ++j) {
    out += format_double(traj.times[j]);
    out += ',';
    out += format_double(traj.xs[j]);
    out += ',';
    out += format_double(traj.ys[j]);
    out += '\n';
  }
  return out;
}

void write_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << format_csv(traj);
  if (!out) throw IoError("failed writing " + path);
}

Trajectory parse_csv(std::string_view text) {
  Trajectory traj;
  std::size_t pos = 0;
  int line_no = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != "t,x,y") throw ConfigError("CSV line 1: expected header 't,x,y'");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
      throw ConfigError("CSV line " + std::to_string(line_no) + ": expected three fields");
    }
    const auto t = parse_double(line.substr(0, c1));
    const auto x = parse_double(line.substr(c1 + 1, c2 - c1 - 1));
    const auto y = parse_double(line.substr(c2 + 1));
    if (!t || !x || !y) {
      throw ConfigError("CSV line " + std::to_string(line_no) + ": malformed number");
    }
    traj.times.push_back(*t);
    traj.xs.push_back(*x);
    traj.ys.push_back(*y);
  }
  if (!header_seen) throw ConfigError("CSV is empty");
  return traj;
}

Trajectory read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

}  // namespace dubovsky
