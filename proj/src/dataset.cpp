#include "picard/dataset.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace picard {
namespace {

using nlohmann::json;

GaussianInteger parse_entry(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::runtime_error("dataset: " + where + ": entry must be an [re, im] integer pair");
  return GaussianInteger(BigInt(j[0].get<long long>()), BigInt(j[1].get<long long>()));
}

// Parses a 2x2 matrix of [re, im] pairs and requires determinant exactly 1
// (not merely a unit): the bundled matrices are transcriptions and any other
// determinant means a transcription error, not a different representative.
MoebiusElement parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw std::runtime_error("dataset: " + where + ": matrix must be 2x2");
  std::array<GaussianInteger, 4> e = {
      parse_entry(j[0][0], where), parse_entry(j[0][1], where),
      parse_entry(j[1][0], where), parse_entry(j[1][1], where)};
  GaussianInteger det = e[0] * e[3] - e[1] * e[2];
  if (!(det == GaussianInteger(1, 0)))
    throw std::runtime_error("dataset: " + where + ": determinant is " + det.str() + ", not 1");
  return MoebiusElement(std::move(e));
}

ReflectionWord parse_reflection_word(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw std::runtime_error("dataset: " + where + ": reflection word must be a nonempty array");
  std::vector<int> letters;
  letters.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::runtime_error("dataset: " + where + ": reflection letters must be integers");
    int v = x.get<int>();
    if (v < 1 || v > 6)
      throw std::runtime_error("dataset: " + where + ": reflection letter out of range 1..6");
    letters.push_back(v);
  }
  return ReflectionWord(std::move(letters));
}

// One token: a name, optionally followed by ^<integer exponent>.
struct Token {
  std::string name;
  long exp = 1;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::istringstream in(s);
  std::string piece;
  while (in >> piece) {
    Token t;
    auto caret = piece.find('^');
    if (caret == std::string::npos) {
      t.name = piece;
    } else {
      t.name = piece.substr(0, caret);
      const std::string e = piece.substr(caret + 1);
      std::size_t used = 0;
      try {
        t.exp = std::stol(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != e.size() || t.exp == 0)
        throw std::invalid_argument("word token '" + piece + "': bad exponent");
    }
    if (t.name.empty()) throw std::invalid_argument("word token '" + piece + "': empty name");
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

MoebiusElement ManifoldGroupData::element_for(const std::string& tokens) const {
  MoebiusElement acc = MoebiusElement::identity();
  for (const Token& t : tokenize(tokens)) {
    MoebiusElement base = MoebiusElement::identity();
    if (t.name == "l") {
      base = picard_l();
    } else if (t.name.size() >= 2 && t.name[0] == 'g') {
      std::size_t used = 0;
      unsigned long idx = std::stoul(t.name.substr(1), &used);
      if (used != t.name.size() - 1 || idx < 1 || idx > generators.size())
        throw std::invalid_argument("word token '" + t.name + "': no such generator");
      base = generators[idx - 1];
    } else if (auto it = auxiliaries.find(t.name); it != auxiliaries.end()) {
      base = it->second.element;
    } else {
      throw std::invalid_argument("word token '" + t.name + "': unknown name");
    }
    if (t.exp < 0) {
      base = base.inverse();
    }
    long count = t.exp < 0 ? -t.exp : t.exp;
    for (long k = 0; k < count; ++k) acc = acc * base;
  }
  return acc;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ManifoldGroupData load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("dataset: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();

  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("dataset: " + path + ": " + e.what());
  }

  ManifoldGroupData data;
  data.checksum = fnv1a64(bytes);
  if (!j.contains("name") || !j["name"].is_string())
    throw std::runtime_error("dataset: " + path + ": missing string field 'name'");
  data.name = j["name"].get<std::string>();

  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].size() != 5)
    throw std::runtime_error("dataset: " + path + ": 'generators' must list exactly 5 matrices");
  const GaussianIdeal one_plus_i(GaussianInteger(1, 1));
  for (std::size_t k = 0; k < 5; ++k) {
    const std::string where = data.name + " generator g" + std::to_string(k + 1);
    MoebiusElement g = parse_matrix(j["generators"][k], where);
    if (!in_principal_congruence(g, one_plus_i))
      throw std::runtime_error("dataset: " + where + ": not congruent to the identity mod 1+i");
    data.generators.push_back(std::move(g));
  }

  if (!j.contains("reflection_words") || !j["reflection_words"].is_array() ||
      j["reflection_words"].size() != 5)
    throw std::runtime_error("dataset: " + path + ": 'reflection_words' must list exactly 5 words");
  for (std::size_t k = 0; k < 5; ++k)
    data.reflection_words.push_back(parse_reflection_word(
        j["reflection_words"][k], data.name + " reflection word " + std::to_string(k + 1)));

  if (j.contains("auxiliaries")) {
    if (!j["auxiliaries"].is_object())
      throw std::runtime_error("dataset: " + path + ": 'auxiliaries' must be an object");
    for (const auto& [name, entry] : j["auxiliaries"].items()) {
      AuxiliaryElement aux{std::string(), MoebiusElement::identity(), std::string(),
                           MoebiusElement::identity()};
      if (!entry.contains("word") || !entry["word"].is_string())
        throw std::runtime_error("dataset: auxiliary '" + name + "': missing string field 'word'");
      aux.word = entry["word"].get<std::string>();
      if (entry.contains("factor"))
        aux.factor = parse_matrix(entry["factor"], data.name + " auxiliary " + name);
      if (entry.contains("note") && entry["note"].is_string())
        aux.note = entry["note"].get<std::string>();
      try {
        aux.element = data.element_for(aux.word) * aux.factor;
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error("dataset: auxiliary '" + name + "': " + e.what());
      }
      data.auxiliaries.emplace(name, std::move(aux));
    }
  }

  if (!j.contains("witnesses") || !j["witnesses"].is_array() || j["witnesses"].size() != 6)
    throw std::runtime_error("dataset: " + path + ": 'witnesses' must list exactly 6 words");
  for (const auto& w : j["witnesses"]) {
    if (!w.is_string())
      throw std::runtime_error("dataset: " + path + ": witnesses must be word strings");
    data.witnesses.push_back(w.get<std::string>());
  }
  for (std::size_t k = 0; k < 6; ++k) {
    try {
      (void)data.element_for(data.witnesses[k]);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("dataset: " + path + ": witness " + std::to_string(k) + ": " +
                               e.what());
    }
  }
  return data;
}

const std::vector<std::string>& dataset_filenames() {
  static const std::vector<std::string> names = {"a_plus.json", "b_plus.json", "c_plus.json",
                                                 "d_plus.json", "e_plus.json"};
  return names;
}

std::vector<ManifoldGroupData> load_all_datasets(const std::string& dir) {
  std::vector<ManifoldGroupData> all;
  all.reserve(dataset_filenames().size());
  for (const std::string& f : dataset_filenames()) all.push_back(load_dataset(dir + "/" + f));
  return all;
}

}  // namespace picard
