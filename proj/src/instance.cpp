#include "bgp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bgp {

namespace {

constexpr Weight kWeightSumCap = Weight(1) << 62;

bool usable_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id)
    if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Instance Instance::create(
    std::vector<Vertex> bought, std::vector<Vertex> sold,
    const std::vector<std::pair<std::string, std::string>>& edges,
    std::optional<std::vector<std::string>> order_hint) {
  Instance inst;
  inst.bought_ = std::move(bought);
  inst.sold_ = std::move(sold);

  Weight wsum = 0;
  auto add_id = [&inst](const std::string& id, int global) {
    if (!usable_id(id))
      throw std::invalid_argument("unusable vertex id '" + id + "'");
    if (!inst.id_to_global_.emplace(id, global).second)
      throw std::invalid_argument("duplicate vertex id '" + id + "'");
  };
  for (int b = 0; b < inst.bought_count(); ++b) {
    if (inst.bought_[b].w < 1)
      throw std::invalid_argument("bought vertex '" + inst.bought_[b].id +
                                  "' must have cost >= 1");
    add_id(inst.bought_[b].id, b);
    wsum += inst.bought_[b].w;
  }
  for (int s = 0; s < inst.sold_count(); ++s) {
    if (inst.sold_[s].w < 0)
      throw std::invalid_argument("sold vertex '" + inst.sold_[s].id +
                                  "' must have gain >= 0");
    add_id(inst.sold_[s].id, inst.sold_global(s));
    wsum += inst.sold_[s].w;
  }
  if (wsum > kWeightSumCap)
    throw std::invalid_argument("total weight exceeds the supported range");

  inst.sold_nbr_.resize(inst.sold_count());
  inst.bought_nbr_.resize(inst.bought_count());
  for (const auto& [sid, bid] : edges) {
    auto sg = inst.find_vertex(sid);
    if (!sg) throw std::invalid_argument("unknown vertex '" + sid + "'");
    auto bg = inst.find_vertex(bid);
    if (!bg) throw std::invalid_argument("unknown vertex '" + bid + "'");
    if (!inst.is_sold_global(*sg))
      throw std::invalid_argument("edge endpoint '" + sid +
                                  "' is not a sold vertex");
    if (inst.is_sold_global(*bg))
      throw std::invalid_argument("edge endpoint '" + bid +
                                  "' is not a bought vertex");
    int s = inst.sold_local(*sg), b = *bg;
    std::uint64_t key = (std::uint64_t(s) << 32) | std::uint64_t(b);
    if (!inst.edge_keys_.emplace(key, true).second)
      throw std::invalid_argument("duplicate edge " + sid + " " + bid);
    inst.sold_nbr_[s].push_back(b);
    inst.bought_nbr_[b].push_back(s);
    ++inst.edges_;
  }
  for (auto& v : inst.sold_nbr_) std::sort(v.begin(), v.end());
  for (auto& v : inst.bought_nbr_) std::sort(v.begin(), v.end());

  if (order_hint) {
    std::vector<int> hint;
    std::vector<bool> seen(inst.bought_count(), false);
    for (const auto& id : *order_hint) {
      auto g = inst.find_vertex(id);
      if (!g || inst.is_sold_global(*g))
        throw std::invalid_argument("order-b mentions unknown bought vertex '" +
                                    id + "'");
      if (seen[*g])
        throw std::invalid_argument("order-b repeats vertex '" + id + "'");
      seen[*g] = true;
      hint.push_back(*g);
    }
    if (int(hint.size()) != inst.bought_count())
      throw std::invalid_argument("order-b must list every bought vertex");
    inst.order_hint_ = std::move(hint);
  }
  return inst;
}

Weight Instance::total_cost() const {
  Weight t = 0;
  for (const auto& v : bought_) t += v.w;
  return t;
}

Weight Instance::total_gain() const {
  Weight t = 0;
  for (const auto& v : sold_) t += v.w;
  return t;
}

bool Instance::operator==(const Instance& o) const {
  auto veq = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].id != b[i].id || a[i].w != b[i].w) return false;
    return true;
  };
  return veq(bought_, o.bought_) && veq(sold_, o.sold_) &&
         sold_nbr_ == o.sold_nbr_ && order_hint_ == o.order_hint_;
}

std::string Instance::serialize() const {
  std::ostringstream out;
  out << "bgp 1\n";
  for (const auto& v : bought_) out << "b " << v.id << " " << v.w << "\n";
  for (const auto& v : sold_) out << "s " << v.id << " " << v.w << "\n";
  for (int s = 0; s < sold_count(); ++s)
    for (int b : sold_nbr_[s])
      out << "e " << sold_[s].id << " " << bought_[b].id << "\n";
  if (order_hint_) {
    out << "order-b";
    for (int b : *order_hint_) out << " " << bought_[b].id;
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

Weight parse_weight(const std::string& tok, int ln) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ln, "bad weight '" + tok + "'");
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  bool header_seen = false;
  std::vector<Instance::Vertex> bought, sold;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<std::vector<std::string>> hint;
  int hint_line = 0;

  while (std::getline(in, line)) {
    ++ln;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "bgp" || toks[1] != "1")
        throw ParseError(ln, "expected header 'bgp 1'");
      header_seen = true;
      continue;
    }
    const std::string& kw = toks[0];
    if (kw == "b" || kw == "s") {
      if (toks.size() != 3)
        throw ParseError(ln, "expected '" + kw + " <id> <weight>'");
      Weight w = parse_weight(toks[2], ln);
      if (kw == "b") {
        if (w < 1) throw ParseError(ln, "bought cost must be >= 1");
        bought.push_back({toks[1], w});
      } else {
        if (w < 0) throw ParseError(ln, "sold gain must be >= 0");
        sold.push_back({toks[1], w});
      }
    } else if (kw == "e") {
      if (toks.size() != 3)
        throw ParseError(ln, "expected 'e <sold-id> <bought-id>'");
      edges.emplace_back(toks[1], toks[2]);
    } else if (kw == "order-b") {
      if (hint) throw ParseError(ln, "repeated order-b line");
      hint = std::vector<std::string>(toks.begin() + 1, toks.end());
      hint_line = ln;
    } else {
      throw ParseError(ln, "unknown directive '" + kw + "'");
    }
  }
  if (!header_seen) throw ParseError(ln ? ln : 1, "expected header 'bgp 1'");
  try {
    return Instance::create(std::move(bought), std::move(sold), edges,
                            std::move(hint));
  } catch (const std::invalid_argument& e) {
    throw ParseError(hint_line ? hint_line : ln, e.what());
  }
}

SubInstance induced_instance(const Instance& inst, const Bits& bought_keep,
                             const Bits& sold_keep) {
  SubInstance sub;
  std::vector<Instance::Vertex> bought, sold;
  std::vector<std::pair<std::string, std::string>> edges;
  bought_keep.for_each([&](int b) {
    sub.parent_bought.push_back(b);
    bought.push_back({inst.bought_id(b), inst.cost(b)});
  });
  sold_keep.for_each([&](int s) {
    sub.parent_sold.push_back(s);
    sold.push_back({inst.sold_id(s), inst.gain(s)});
    for (int b : inst.sold_nbrs(s))
      if (bought_keep.test(b))
        edges.emplace_back(inst.sold_id(s), inst.bought_id(b));
  });
  std::optional<std::vector<std::string>> hint;
  if (inst.order_hint()) {
    hint = std::vector<std::string>{};
    for (int b : *inst.order_hint())
      if (bought_keep.test(b)) hint->push_back(inst.bought_id(b));
  }
  sub.inst = Instance::create(std::move(bought), std::move(sold), edges,
                              std::move(hint));
  return sub;
}

bool is_valid_ordering(const Instance& inst, const Ordering& ord) {
  const int n = inst.vertex_count();
  if (int(ord.seq.size()) != n)
    throw std::invalid_argument("ordering must list every vertex exactly once");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int g = ord.seq[i];
    if (g < 0 || g >= n || pos[g] != -1)
      throw std::invalid_argument(
          "ordering must list every vertex exactly once");
    pos[g] = i;
  }
  for (int s = 0; s < inst.sold_count(); ++s)
    for (int b : inst.sold_nbrs(s))
      if (pos[b] > pos[inst.sold_global(s)]) return false;
  return true;
}

Weight budget_of_ordering(const Instance& inst, const Ordering& ord) {
  if (!is_valid_ordering(inst, ord))
    throw std::invalid_argument("ordering violates a precedence constraint");
  Weight run = 0, peak = 0;
  for (int g : ord.seq) {
    if (inst.is_sold_global(g))
      run -= inst.gain(inst.sold_local(g));
    else
      run += inst.cost(g);
    peak = std::max(peak, run);
  }
  return peak;
}

Weight net_value(const Instance& inst, const Bits& vertices) {
  Weight v = 0;
  vertices.for_each([&](int g) {
    if (inst.is_sold_global(g))
      v += inst.gain(inst.sold_local(g));
    else
      v -= inst.cost(g);
  });
  return v;
}

Weight prefix_cost(const Instance& inst, const Bits& vertices) {
  return -net_value(inst, vertices);
}

std::string serialize_ordering(const Instance& inst, const Ordering& ord) {
  std::ostringstream out;
  out << "order 1\n";
  for (int g : ord.seq) out << inst.vertex_id(g) << "\n";
  return out.str();
}

Ordering parse_ordering(const Instance& inst, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  bool header_seen = false;
  Ordering ord;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "order" || toks[1] != "1")
        throw ParseError(ln, "expected header 'order 1'");
      header_seen = true;
      continue;
    }
    if (toks.size() != 1) throw ParseError(ln, "expected one id per line");
    auto g = inst.find_vertex(toks[0]);
    if (!g) throw ParseError(ln, "unknown vertex '" + toks[0] + "'");
    ord.seq.push_back(*g);
  }
  if (!header_seen) throw ParseError(ln ? ln : 1, "expected header 'order 1'");
  return ord;
}

}  // namespace bgp
