#include "ulam/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ulam {

using nlohmann::json;

namespace {

json channel_json(const Channel& c) {
  json strings = json::array();
  for (const LieString& u : c.strings()) {
    json s = json::array();
    for (const Lie& l : u) s.push_back({int(l.truth), int(l.reply)});
    strings.push_back(s);
  }
  return json{{"t", c.t()}, {"strings", strings}};
}

Channel channel_parse(const json& j) {
  if (!j.contains("t") || !j.contains("strings"))
    throw std::invalid_argument("channel json: need fields t, strings");
  int t = j.at("t").get<int>();
  std::vector<LieString> strings;
  for (const json& s : j.at("strings")) {
    LieString u;
    for (const json& pair : s) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("channel json: lie must be [a,b]");
      int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
      if (a < 0 || b < 0 || a >= t || b >= t)
        throw std::invalid_argument("channel json: letter out of range");
      u.push_back(Lie{std::uint8_t(a), std::uint8_t(b)});
    }
    strings.push_back(std::move(u));
  }
  return Channel(t, std::move(strings));  // validates a != b, duplicates
}

}  // namespace

std::string channel_to_json(const Channel& c) { return channel_json(c).dump(2); }

Channel channel_from_json(const std::string& text) {
  return channel_parse(json::parse(text));
}

Channel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open channel file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return channel_from_json(ss.str());
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

std::string placement_to_json(const PlacementProblem& p, const Placement& pl) {
  json arr = json::array();
  for (const auto& [stem, cls] : pl.stems)
    arr.push_back({{"stem", stem.str()},
                   {"channel", p.demand.at(cls).first.key()}});
  return arr.dump(2);
}

std::string strategy_to_json(const TwoBatchStrategy& s) {
  json j;
  j["channel"] = channel_json(s.channel);
  j["variant"] = s.variant == Variant::original ? "original" : "pathological";
  j["q1"] = s.q1;
  j["q2"] = s.q2;
  // first batch grouped into blocks sharing a word
  std::map<std::string, std::vector<long long>> blocks;
  for (long long e = 0; e < s.n(); ++e)
    blocks[s.first_batch[std::size_t(e)].str()].push_back(e);
  json jblocks = json::array();
  for (const auto& [word, ids] : blocks)
    jblocks.push_back({{"word", word}, {"element_ids", ids}});
  j["blocks"] = jblocks;
  json second = json::array();
  for (std::uint64_t r = 0; r < s.second_batch.size(); ++r) {
    json assignments = json::array();
    for (long long e = 0; e < s.n(); ++e)
      assignments.push_back(
          {{"element", e}, {"word", s.second_batch[r][std::size_t(e)].str()}});
    second.push_back(
        {{"response", Word::from_index(r, s.q1, s.channel.t()).str()},
         {"assignments", assignments}});
  }
  j["second"] = second;
  return j.dump();
}

TwoBatchStrategy strategy_from_json(const std::string& text) {
  json j = json::parse(text);
  TwoBatchStrategy s(channel_parse(j.at("channel")));
  s.variant = j.at("variant").get<std::string>() == "original"
                  ? Variant::original
                  : Variant::pathological;
  s.q1 = j.at("q1").get<int>();
  s.q2 = j.at("q2").get<int>();
  long long n = 0;
  for (const json& b : j.at("blocks"))
    for (const json& id : b.at("element_ids"))
      n = std::max(n, id.get<long long>() + 1);
  s.first_batch.assign(std::size_t(n), Word{});
  for (const json& b : j.at("blocks")) {
    Word w = Word::from_string(b.at("word").get<std::string>());
    for (const json& id : b.at("element_ids"))
      s.first_batch.at(std::size_t(id.get<long long>())) = w;
  }
  std::uint64_t responses = upow64(s.channel.t(), s.q1);
  s.second_batch.assign(responses, std::vector<Word>(std::size_t(n), Word{}));
  for (const json& r : j.at("second")) {
    Word response = Word::from_string(r.at("response").get<std::string>());
    std::uint64_t ri = response.index(s.channel.t());
    for (const json& a : r.at("assignments"))
      s.second_batch.at(ri).at(std::size_t(a.at("element").get<long long>())) =
          Word::from_string(a.at("word").get<std::string>());
  }
  return s;
}

TwoBatchStrategy load_strategy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open strategy file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return strategy_from_json(ss.str());
}

namespace {

json tree_json(const StrategyTree& tree) {
  json q = json::object();
  for (const auto& [cls, parts] : tree.question.split)
    q[std::to_string(cls)] = parts;
  json children = json::array();
  for (const auto& child : tree.children)
    children.push_back(child ? tree_json(*child) : json());
  return json{{"question", q}, {"children", children}};
}

}  // namespace

std::string tree_to_json(const StrategyTree& tree) { return tree_json(tree).dump(2); }

}  // namespace ulam
