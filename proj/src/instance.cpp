#include "frtb/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "frtb/phi.hpp"
#include "frtb/report.hpp"

namespace frtb {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

RVec parse_vec(const std::string& s, int line) {
  RVec v;
  for (const auto& tok : split(s, ',')) {
    if (tok.empty())
      throw std::runtime_error("line " + std::to_string(line) +
                               ": empty rational");
    try {
      v.push_back(parse_rat(tok));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return v;
}

struct ScLine {
  int i, j, k;
  Rat v;
};

}  // namespace

Quiver Instance::quiver() const {
  if (sigma) return build_sigma_quiver(base);
  if (explicit_quiver) return *explicit_quiver;
  throw std::runtime_error("instance has neither [sigma] nor [quiver]");
}

FaceWeight Instance::face_weight(const Quiver& q) const {
  if (!face_entries.empty()) {
    auto q2 = fiber_product(q, 2);
    std::map<std::string, int> arrow_idx;
    for (int i = 0; i < int(q.arrows.size()); ++i) arrow_idx[q.arrows[i].id] = i;
    std::map<std::pair<int, int>, int> pair_idx;
    for (int i = 0; i < int(q2.size()); ++i)
      pair_idx[{q2[i].arrows[0], q2[i].arrows[1]}] = i;
    FaceWeight w;
    w.nQ2 = int(q2.size());
    w.values.assign(size_t(w.nQ2) * w.nQ2, RVec{});
    for (const auto& e : face_entries) {
      auto need = [&](const std::string& id) {
        auto it = arrow_idx.find(id);
        if (it == arrow_idx.end())
          throw std::runtime_error("face weight names unknown arrow '" + id + "'");
        return it->second;
      };
      auto pr = [&](int u, int v) {
        auto it = pair_idx.find({u, v});
        if (it == pair_idx.end())
          throw std::runtime_error("face weight names a non-composable pair");
        return it->second;
      };
      int tr = pr(need(e.a), need(e.b));
      int lb = pr(need(e.c), need(e.d));
      w.set(tr, lb, e.value);
    }
    return w;
  }
  if (sigma) return build_w_sigma(base, *sigma, q);
  throw std::runtime_error("instance has neither [face_w] nor [sigma]");
}

Instance parse_instance_text(const std::string& text, const std::string& name) {
  Instance inst;
  inst.name = name;
  inst.digest = digest_bytes(text);

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::string section;

  int dimension = -1;
  RVec unit;
  std::vector<ScLine> sc;
  std::vector<std::string> lam_labels, x_labels;
  std::map<std::string, std::vector<std::string>> deg_lines;
  RVec psi;
  std::vector<std::pair<RVec, RVec>> casimir;
  struct SigLine {
    std::string a, b, c, d, lam;
    RVec v;
    int line;
  };
  std::vector<SigLine> sig_lines;
  std::vector<std::tuple<std::string, std::vector<std::string>, int>> arrow_lines;
  std::vector<std::tuple<std::vector<std::string>, RVec, int>> face_lines;
  std::vector<std::tuple<std::string, std::vector<std::string>, int>> wit_lines;

  auto err = [&](const std::string& m) -> std::runtime_error {
    return std::runtime_error("line " + std::to_string(lineno) + ": " + m);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw err("malformed section header");
      section = line.substr(1, line.size() - 2);
      static const std::vector<std::string> known = {
          "algebra", "lambda", "x",        "deg",    "frobenius",
          "sigma",   "face_w", "rigidity", "quiver", "options"};
      bool ok = false;
      for (const auto& k : known) ok = ok || k == section;
      if (!ok) throw err("unknown section [" + section + "]");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw err("expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw err("empty key");

    if (section == "algebra") {
      if (key == "dimension") {
        dimension = std::stoi(val);
      } else if (key == "unit") {
        unit = parse_vec(val, lineno);
      } else if (key == "c") {
        auto w = words_of(val);
        if (w.size() != 4) throw err("structure constant needs 'i j k value'");
        ScLine s;
        s.i = std::stoi(w[0]);
        s.j = std::stoi(w[1]);
        s.k = std::stoi(w[2]);
        try {
          s.v = parse_rat(w[3]);
        } catch (const std::exception& e) {
          throw err(e.what());
        }
        sc.push_back(std::move(s));
      } else {
        throw err("unknown key '" + key + "' in [algebra]");
      }
    } else if (section == "lambda" || section == "x") {
      if (key != "labels") throw err("unknown key '" + key + "'");
      auto& tgt = section == "lambda" ? lam_labels : x_labels;
      tgt = split(val, ',');
    } else if (section == "deg") {
      deg_lines[key] = split(val, ',');
    } else if (section == "frobenius") {
      if (key == "psi") {
        psi = parse_vec(val, lineno);
      } else if (key == "e") {
        auto parts = split(val, '|');
        if (parts.size() != 2) throw err("casimir pair needs 'left | right'");
        casimir.emplace_back(parse_vec(parts[0], lineno),
                             parse_vec(parts[1], lineno));
      } else {
        throw err("unknown key '" + key + "' in [frobenius]");
      }
    } else if (section == "sigma") {
      if (key != "s") throw err("unknown key '" + key + "' in [sigma]");
      auto colon = val.find(':');
      if (colon == std::string::npos) throw err("sigma entry needs ':' value");
      auto idx = words_of(val.substr(0, colon));
      if (idx.size() != 5) throw err("sigma entry needs 'a b c d lambda : v'");
      SigLine s;
      s.a = idx[0];
      s.b = idx[1];
      s.c = idx[2];
      s.d = idx[3];
      s.lam = idx[4];
      s.v = parse_vec(val.substr(colon + 1), lineno);
      s.line = lineno;
      sig_lines.push_back(std::move(s));
    } else if (section == "quiver") {
      if (key != "arrow") throw err("unknown key '" + key + "' in [quiver]");
      arrow_lines.emplace_back(key, words_of(val), lineno);
    } else if (section == "face_w") {
      if (key != "w") throw err("unknown key '" + key + "' in [face_w]");
      auto colon = val.find(':');
      if (colon == std::string::npos) throw err("face entry needs ':' value");
      auto idx = words_of(val.substr(0, colon));
      if (idx.size() != 4) throw err("face entry needs 'a b c d : v'");
      face_lines.emplace_back(idx, parse_vec(val.substr(colon + 1), lineno),
                              lineno);
    } else if (section == "rigidity") {
      wit_lines.emplace_back(key, words_of(val), lineno);
    } else if (section == "options") {
      if (key == "degree_cap")
        inst.options.degree_cap = std::stoi(val);
      else if (key == "membership_bound")
        inst.options.membership_bound = std::stoi(val);
      else
        throw err("unknown key '" + key + "' in [options]");
    } else {
      throw err("key outside any section");
    }
  }

  // assemble the algebra
  if (dimension <= 0) throw std::runtime_error("[algebra] dimension missing");
  AlgebraSpec R;
  R.dim = dimension;
  R.sc.assign(size_t(dimension) * dimension * dimension, Rat(0));
  for (const auto& s : sc) {
    if (s.i < 0 || s.i >= dimension || s.j < 0 || s.j >= dimension || s.k < 0 ||
        s.k >= dimension)
      throw std::runtime_error("structure constant index out of range");
    R.c(s.i, s.j, s.k) = s.v;
  }
  if (int(unit.size()) != dimension)
    throw std::runtime_error("[algebra] unit has wrong dimension");
  R.unit = unit;
  R.validate();

  if (lam_labels.empty()) throw std::runtime_error("[lambda] labels missing");
  inst.base.R = std::move(R);
  inst.base.lambda = LabelSet::of(lam_labels);
  if (x_labels.empty()) x_labels = {"0"};
  inst.base.x = LabelSet::of(x_labels);

  std::vector<std::vector<int>> images(inst.base.nX());
  for (int xi = 0; xi < inst.base.nX(); ++xi) {
    auto it = deg_lines.find(inst.base.x.names[xi]);
    if (it == deg_lines.end()) {
      // identity when [deg] omits the label and sigma is absent too
      std::vector<int> id(inst.base.nLam());
      for (int l = 0; l < inst.base.nLam(); ++l) id[l] = l;
      images[xi] = std::move(id);
      continue;
    }
    if (int(it->second.size()) != inst.base.nLam())
      throw std::runtime_error("degree line for '" + it->first +
                               "' has wrong length");
    std::vector<int> img;
    for (const auto& lab : it->second) img.push_back(inst.base.lambda.at(lab));
    images[xi] = std::move(img);
  }
  inst.base.deg = DegreeMap::from_images(images, inst.base.nLam());

  if (psi.empty()) throw std::runtime_error("[frobenius] psi missing");
  if (int(psi.size()) != dimension)
    throw std::runtime_error("[frobenius] psi has wrong dimension");
  for (const auto& [e1, e2] : casimir)
    if (int(e1.size()) != dimension || int(e2.size()) != dimension)
      throw std::runtime_error("[frobenius] casimir pair has wrong dimension");
  inst.frobR.psi = psi;
  inst.frobR.casimir = casimir;

  if (!sig_lines.empty()) {
    SigmaFamily s;
    for (const auto& l : sig_lines) {
      if (int(l.v.size()) != dimension)
        throw std::runtime_error("line " + std::to_string(l.line) +
                                 ": sigma value has wrong dimension");
      std::array<int, 4> key = {inst.base.x.at(l.a), inst.base.x.at(l.b),
                                inst.base.x.at(l.c), inst.base.x.at(l.d)};
      auto& slot = s.entries[key];
      if (slot.empty()) slot.assign(inst.base.nM(), Rat(0));
      int lam = inst.base.lambda.at(l.lam);
      for (int r = 0; r < dimension; ++r)
        slot[inst.base.m_index(lam, r)] += l.v[r];
    }
    inst.sigma = std::move(s);
  }

  if (!arrow_lines.empty()) {
    Quiver q;
    q.n_vertices = inst.base.nLam();
    for (const auto& [key, w, line] : arrow_lines) {
      if (w.size() != 3)
        throw std::runtime_error("line " + std::to_string(line) +
                                 ": arrow needs 'id src tgt'");
      Arrow a;
      a.id = w[0];
      a.src = inst.base.lambda.at(w[1]);
      a.tgt = inst.base.lambda.at(w[2]);
      q.arrows.push_back(std::move(a));
    }
    q.validate();
    inst.explicit_quiver = std::move(q);
  }

  for (const auto& [idx, v, line] : face_lines) {
    RawFaceEntry e;
    e.a = idx[0];
    e.b = idx[1];
    e.c = idx[2];
    e.d = idx[3];
    if (int(v.size()) != dimension)
      throw std::runtime_error("line " + std::to_string(line) +
                               ": face value has wrong dimension");
    e.value = v;
    inst.face_entries.push_back(std::move(e));
  }

  for (const auto& [key, w, line] : wit_lines) {
    auto kw = words_of(key);
    if (kw.size() != 3 || (kw[0] != "x" && kw[0] != "y"))
      throw std::runtime_error("line " + std::to_string(line) +
                               ": witness key needs 'x a b' or 'y a b'");
    WitnessSpec ws;
    ws.table = kw[0][0];
    ws.a = inst.base.x.at(kw[1]);
    ws.b = inst.base.x.at(kw[2]);
    if (w.empty())
      throw std::runtime_error("line " + std::to_string(line) +
                               ": empty witness");
    ws.kind = w[0];
    if (ws.kind == "L" || ws.kind == "Li") {
      if (w.size() != 3)
        throw std::runtime_error("line " + std::to_string(line) +
                                 ": witness needs 'L a b' or 'Li a b'");
      ws.wa = inst.base.x.at(w[1]);
      ws.wb = inst.base.x.at(w[2]);
    } else if (ws.kind != "0") {
      throw std::runtime_error("line " + std::to_string(line) +
                               ": witness kind must be L, Li or 0");
    }
    inst.witnesses.push_back(std::move(ws));
    inst.has_witnesses = true;
  }

  return inst;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str(), path);
}

}  // namespace frtb
