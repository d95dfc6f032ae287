#include "oie/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "oie/text.hpp"

namespace oie {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

json parse_json_text(const std::string& content, const std::string& origin) {
  json root = json::parse(content, nullptr, false);
  if (root.is_discarded()) throw ParseError("malformed JSON in '" + origin + "'");
  return root;
}

void check_keys(const json& object, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* key) {
          return it.key() == key;
        }) == allowed.end())
      throw ParseError(where + ": unknown key '" + it.key() + "'");
  }
}

const json& require(const json& object, const char* key,
                    const std::string& where) {
  auto it = object.find(key);
  if (it == object.end())
    throw ParseError(where + ": missing required key '" + std::string(key) + "'");
  return *it;
}

std::string require_string(const json& object, const char* key,
                           const std::string& where) {
  const json& value = require(object, key, where);
  if (!value.is_string())
    throw ParseError(where + ": '" + std::string(key) + "' must be a string");
  return value.get<std::string>();
}

Token parse_gold_token(const json& node, const Sentence& sentence,
                       const std::string& where) {
  if (!node.is_object()) throw ParseError(where + ": token must be an object");
  check_keys(node, {"text", "index"}, where);
  Token token;
  token.text = normalize(require_string(node, "text", where));
  if (token.text.empty())
    throw IntegrityError(where + ": token text empty after normalization");
  if (tokenize(token.text) != std::vector<std::string>{token.text})
    throw IntegrityError(where + ": token text '" + token.text +
                         "' is not a single token");

  const json& index = require(node, "index", where);
  if (index.is_string()) {
    if (index.get<std::string>() != "inf")
      throw ParseError(where + ": index must be an integer or \"inf\"");
    token.inferred = true;
  } else if (index.is_number_integer()) {
    const auto i = index.get<int64_t>();
    if (i < 0 || i >= static_cast<int64_t>(sentence.tokens.size()))
      throw IntegrityError(where + ": token index " + std::to_string(i) +
                           " outside sentence ('" + sentence.sentence_id +
                           "' has " + std::to_string(sentence.tokens.size()) +
                           " tokens)");
    if (sentence.tokens[static_cast<size_t>(i)] != token.text)
      throw IntegrityError(where + ": token '" + token.text +
                           "' does not match sentence token " +
                           std::to_string(i) + " ('" +
                           sentence.tokens[static_cast<size_t>(i)] + "')");
    token.index = static_cast<int32_t>(i);
  } else {
    throw ParseError(where + ": index must be an integer or \"inf\"");
  }
  return token;
}

Part parse_gold_part(const json& node, Slot slot, const Sentence& sentence,
                     const std::string& where) {
  if (!node.is_object()) throw ParseError(where + ": part must be an object");
  check_keys(node, {"tokens", "resolved_text"}, where);
  Part part;
  part.slot = slot;
  const json& tokens = require(node, "tokens", where);
  if (!tokens.is_array()) throw ParseError(where + ": 'tokens' must be an array");
  for (size_t i = 0; i < tokens.size(); ++i)
    part.tokens.push_back(parse_gold_token(
        tokens[i], sentence, where + ".tokens[" + std::to_string(i) + "]"));
  if (auto it = node.find("resolved_text"); it != node.end()) {
    if (!it->is_string())
      throw ParseError(where + ": 'resolved_text' must be a string");
    part.resolved_text = it->get<std::string>();
  }
  return part;
}

Part text_part(Slot slot, const std::string& text) {
  Part part;
  part.slot = slot;
  for (auto& word : tokenize(text))
    part.tokens.push_back(Token{std::move(word), std::nullopt, false});
  return part;
}

// Extra argument strings beyond arg5 are folded into arg5 so that verbose
// predictions keep their full length.
void assign_extra_args(TupleRecord& tuple, const std::vector<std::string>& args) {
  for (size_t i = 0; i < args.size(); ++i) {
    const Slot slot = i < 2 ? static_cast<Slot>(static_cast<int>(Slot::arg3) + i)
                            : Slot::arg5;
    Part part = text_part(slot, args[i]);
    if (part.tokens.empty()) continue;
    auto it = tuple.parts.find(slot);
    if (it == tuple.parts.end())
      tuple.parts.emplace(slot, std::move(part));
    else
      it->second.tokens.insert(it->second.tokens.end(), part.tokens.begin(),
                               part.tokens.end());
  }
}

double clamp_confidence(double value) {
  return std::min(1.0, std::max(0.0, value));
}

bool parse_double(std::string_view text, double& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  for (;;) {
    const size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::string file_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::string ascii_lower(std::string s) {
  for (char& c : s)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return s;
}

std::string tuple_location(const TupleRecord& tuple, size_t ordinal) {
  return "sentence '" + tuple.sentence_id + "' tuple " + std::to_string(ordinal);
}

}  // namespace

GoldSet parse_gold(const json& root) {
  if (!root.is_object()) throw ParseError("gold root must be an object");
  check_keys(root, {"documents"}, "gold root");
  const json& documents = require(root, "documents", "gold root");
  if (!documents.is_array()) throw ParseError("'documents' must be an array");

  GoldSet gold;
  std::set<std::string> seen_ids;

  for (const json& doc : documents) {
    if (!doc.is_object()) throw ParseError("document must be an object");
    check_keys(doc, {"doc_id", "sentences"}, "document");
    const std::string doc_id = require_string(doc, "doc_id", "document");
    const json& sentences = require(doc, "sentences", "document '" + doc_id + "'");
    if (!sentences.is_array())
      throw ParseError("document '" + doc_id + "': 'sentences' must be an array");

    for (const json& node : sentences) {
      const std::string where = "document '" + doc_id + "'";
      if (!node.is_object()) throw ParseError(where + ": sentence must be an object");
      check_keys(node, {"sentence_id", "text", "tuples"}, where);

      Sentence sentence;
      sentence.doc_id = doc_id;
      sentence.sentence_id = require_string(node, "sentence_id", where);
      sentence.text = require_string(node, "text", where);
      sentence.tokens = tokenize(sentence.text);
      if (!seen_ids.insert(sentence.sentence_id).second)
        throw ParseError("duplicate sentence_id '" + sentence.sentence_id + "'");

      const json& tuples = require(node, "tuples",
                                   "sentence '" + sentence.sentence_id + "'");
      if (!tuples.is_array())
        throw ParseError("sentence '" + sentence.sentence_id +
                         "': 'tuples' must be an array");

      size_t ordinal = 0;
      for (const json& tnode : tuples) {
        const std::string twhere = "sentence '" + sentence.sentence_id +
                                   "' tuple " + std::to_string(ordinal);
        if (!tnode.is_object()) throw ParseError(twhere + ": tuple must be an object");
        check_keys(tnode, {"attributed", "parts"}, twhere);

        TupleRecord tuple;
        tuple.sentence_id = sentence.sentence_id;
        if (auto it = tnode.find("attributed"); it != tnode.end()) {
          if (!it->is_boolean())
            throw ParseError(twhere + ": 'attributed' must be a boolean");
          tuple.attributed = it->get<bool>();
        }

        const json& parts = require(tnode, "parts", twhere);
        if (!parts.is_object()) throw ParseError(twhere + ": 'parts' must be an object");
        for (auto it = parts.begin(); it != parts.end(); ++it) {
          const auto slot = slot_from_name(it.key());
          if (!slot)
            throw ParseError(twhere + ": unknown part slot '" + it.key() + "'");
          tuple.parts[*slot] = parse_gold_part(
              it.value(), *slot, sentence, twhere + "." + it.key());
        }
        gold.tuples.push_back(std::move(tuple));
        ++ordinal;
      }
      gold.sentences.push_back(std::move(sentence));
    }
  }
  return gold;
}

GoldSet load_gold(const std::string& path) {
  return parse_gold(parse_json_text(read_file(path), path));
}

json gold_to_json(const GoldSet& gold) {
  json documents = json::array();
  json* current = nullptr;
  std::string current_doc;

  for (const auto& sentence : gold.sentences) {
    if (current == nullptr || sentence.doc_id != current_doc) {
      documents.push_back(
          {{"doc_id", sentence.doc_id}, {"sentences", json::array()}});
      current = &documents.back();
      current_doc = sentence.doc_id;
    }
    json tuples = json::array();
    for (const auto& tuple : gold.tuples) {
      if (tuple.sentence_id != sentence.sentence_id) continue;
      json parts = json::object();
      for (const auto& [slot, part] : tuple.parts) {
        json tokens = json::array();
        for (const auto& token : part.tokens) {
          json node = {{"text", token.text}};
          if (token.index)
            node["index"] = *token.index;
          else
            node["index"] = "inf";
          tokens.push_back(std::move(node));
        }
        json pnode = {{"tokens", std::move(tokens)}};
        if (part.resolved_text) pnode["resolved_text"] = *part.resolved_text;
        parts[std::string(slot_name(slot))] = std::move(pnode);
      }
      tuples.push_back(
          {{"attributed", tuple.attributed}, {"parts", std::move(parts)}});
    }
    (*current)["sentences"].push_back({{"sentence_id", sentence.sentence_id},
                                       {"text", sentence.text},
                                       {"tuples", std::move(tuples)}});
  }
  return json{{"documents", std::move(documents)}};
}

void write_gold(const GoldSet& gold, const std::string& path) {
  write_file(path, gold_to_json(gold).dump(2) + "\n");
}

PredictionSet parse_uniform(const json& root, const std::string& system_name) {
  if (!root.is_array()) throw ParseError("uniform predictions must be an array");

  PredictionSet preds;
  preds.system_name = system_name;

  size_t ordinal = 0;
  for (const json& node : root) {
    const std::string where = "prediction " + std::to_string(ordinal);
    if (!node.is_object()) throw ParseError(where + ": record must be an object");
    check_keys(node,
               {"sentence_id", "arg1", "rel", "arg2", "args", "confidence",
                "extractor"},
               where);

    TupleRecord tuple;
    tuple.sentence_id = require_string(node, "sentence_id", where);

    if (Part p = text_part(Slot::arg1, require_string(node, "arg1", where));
        !p.tokens.empty())
      tuple.parts[Slot::arg1] = std::move(p);
    if (Part p = text_part(Slot::rel, require_string(node, "rel", where));
        !p.tokens.empty())
      tuple.parts[Slot::rel] = std::move(p);
    if (auto it = node.find("arg2"); it != node.end()) {
      if (!it->is_string()) throw ParseError(where + ": 'arg2' must be a string");
      if (Part p = text_part(Slot::arg2, it->get<std::string>()); !p.tokens.empty())
        tuple.parts[Slot::arg2] = std::move(p);
    }
    if (auto it = node.find("args"); it != node.end()) {
      if (!it->is_array())
        throw ParseError(where + ": 'args' must be an array of strings");
      std::vector<std::string> args;
      for (const json& arg : *it) {
        if (!arg.is_string())
          throw ParseError(where + ": 'args' must be an array of strings");
        args.push_back(arg.get<std::string>());
      }
      assign_extra_args(tuple, args);
    }
    if (auto it = node.find("confidence"); it != node.end()) {
      if (!it->is_number())
        throw ParseError(where + ": 'confidence' must be a number");
      tuple.confidence = clamp_confidence(it->get<double>());
    } else {
      tuple.confidence = 1.0;
    }

    if (preds.system_name.empty()) {
      if (auto it = node.find("extractor"); it != node.end() && it->is_string())
        preds.system_name = it->get<std::string>();
    }
    preds.tuples.push_back(std::move(tuple));
    ++ordinal;
  }
  return preds;
}

PredictionSet parse_tsv(const std::string& content,
                        const std::string& system_name) {
  PredictionSet preds;
  preds.system_name = system_name;

  std::istringstream in(content);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> fields = split_tabs(line);
    if (line_no == 1 && !fields.empty() &&
        ascii_lower(fields[0]) == "sentence_id")
      continue;  // optional header
    if (fields.size() < 3)
      throw ParseError("tsv line " + std::to_string(line_no) +
                       ": expected at least sentence_id, arg1 and rel");

    TupleRecord tuple;
    tuple.sentence_id = fields[0];

    double confidence = 1.0;
    size_t first_part = 1;
    if (double value; parse_double(fields[1], value)) {
      confidence = clamp_confidence(value);
      first_part = 2;
    }
    tuple.confidence = confidence;

    std::vector<std::string> extra;
    for (size_t i = first_part; i < fields.size(); ++i) {
      const size_t position = i - first_part;  // 0 = arg1, 1 = rel, 2 = arg2, ...
      if (position <= 2) {
        const Slot slot = position == 0   ? Slot::arg1
                          : position == 1 ? Slot::rel
                                          : Slot::arg2;
        if (Part p = text_part(slot, fields[i]); !p.tokens.empty())
          tuple.parts[slot] = std::move(p);
      } else {
        extra.push_back(fields[i]);
      }
    }
    assign_extra_args(tuple, extra);
    preds.tuples.push_back(std::move(tuple));
  }
  return preds;
}

PredictionSet load_predictions(const std::string& path, PredictionFormat format,
                               const std::string& system_name) {
  const std::string content = read_file(path);
  PredictionSet preds =
      format == PredictionFormat::uniform
          ? parse_uniform(parse_json_text(content, path), system_name)
          : parse_tsv(content, system_name);
  if (preds.system_name.empty()) preds.system_name = file_stem(path);
  return preds;
}

json predictions_to_json(const PredictionSet& preds) {
  json records = json::array();
  for (const auto& tuple : preds.tuples) {
    json node = {{"sentence_id", tuple.sentence_id}};
    auto part_text = [&](Slot slot) -> std::string {
      const Part* part = tuple.part(slot);
      if (part == nullptr) return {};
      std::vector<std::string> words;
      for (const auto& token : part->tokens) words.push_back(token.text);
      return join_tokens(words);
    };
    node["arg1"] = part_text(Slot::arg1);
    node["rel"] = part_text(Slot::rel);
    if (tuple.part(Slot::arg2)) node["arg2"] = part_text(Slot::arg2);
    json args = json::array();
    for (Slot slot : {Slot::arg3, Slot::arg4, Slot::arg5})
      if (tuple.part(slot)) args.push_back(part_text(slot));
    if (!args.empty()) node["args"] = std::move(args);
    node["confidence"] = tuple.confidence.value_or(1.0);
    records.push_back(std::move(node));
  }
  return records;
}

void write_predictions_uniform(const PredictionSet& preds,
                               const std::string& path) {
  write_file(path, predictions_to_json(preds).dump(2) + "\n");
}

std::vector<ValidationIssue> validate_gold(const GoldSet& gold) {
  std::vector<ValidationIssue> issues;
  auto add = [&](Severity severity, const std::string& location,
                 const std::string& message) {
    issues.push_back({severity, location, message});
  };

  std::map<std::string, size_t> ordinals;
  for (const auto& tuple : gold.tuples) {
    const std::string location = tuple_location(tuple, ordinals[tuple.sentence_id]++);
    const Sentence* sentence = gold.find_sentence(tuple.sentence_id);
    if (sentence == nullptr) {
      add(Severity::error, location, "sentence_id resolves to no sentence");
      continue;
    }

    const Part* arg1 = tuple.part(Slot::arg1);
    if (arg1 == nullptr || arg1->tokens.empty())
      add(Severity::error, location, "first argument is missing or empty");
    const Part* rel = tuple.part(Slot::rel);
    if (rel == nullptr || rel->tokens.empty())
      add(Severity::error, location, "relation is missing or empty");

    int args = arg1 != nullptr && !arg1->tokens.empty() ? 1 : 0;
    for (Slot slot : {Slot::arg2, Slot::arg3, Slot::arg4, Slot::arg5}) {
      const Part* part = tuple.part(slot);
      if (part == nullptr) continue;
      if (part->tokens.empty())
        add(Severity::error, location,
            "part '" + std::string(slot_name(slot)) + "' has no tokens");
      ++args;
    }
    if (args > 5)
      add(Severity::error, location, "more than 5 arguments");

    for (Slot slot : {Slot::arg3, Slot::arg4, Slot::arg5}) {
      const Slot previous = static_cast<Slot>(static_cast<int>(slot) - 1);
      if (tuple.part(slot) != nullptr && tuple.part(previous) == nullptr)
        add(Severity::error, location,
            "part '" + std::string(slot_name(slot)) + "' present without '" +
                std::string(slot_name(previous)) + "'");
    }

    for (const auto& [slot, part] : tuple.parts) {
      for (const auto& token : part.tokens) {
        if (token.text.empty())
          add(Severity::error, location,
              "empty token in '" + std::string(slot_name(slot)) + "'");
        if (!token.index) continue;
        if (*token.index < 0 ||
            *token.index >= static_cast<int32_t>(sentence->tokens.size()))
          add(Severity::error, location,
              "token index " + std::to_string(*token.index) +
                  " outside sentence");
        else if (sentence->tokens[static_cast<size_t>(*token.index)] != token.text)
          add(Severity::error, location,
              "token '" + token.text + "' does not match sentence token " +
                  std::to_string(*token.index));
      }
      if (part.resolved_text) {
        std::vector<std::string> raw;
        for (const auto& token : part.tokens) raw.push_back(token.text);
        if (part.resolved_text->empty())
          add(Severity::warning, location,
              "empty resolved span on '" + std::string(slot_name(slot)) + "'");
        else if (tokenize(*part.resolved_text) == raw)
          add(Severity::warning, location,
              "resolved span equals the raw span on '" +
                  std::string(slot_name(slot)) + "'");
      }
    }
  }
  return issues;
}

std::vector<ValidationIssue> unknown_sentence_issues(const PredictionSet& preds,
                                                     const GoldSet& gold) {
  std::vector<ValidationIssue> issues;
  std::set<std::string> reported;
  for (const auto& tuple : preds.tuples) {
    if (gold.find_sentence(tuple.sentence_id) != nullptr) continue;
    if (!reported.insert(tuple.sentence_id).second) continue;
    issues.push_back({Severity::warning, "sentence '" + tuple.sentence_id + "'",
                      "prediction references an unknown sentence_id; kept, "
                      "but it can never match"});
  }
  return issues;
}

StatsReport resource_stats(const GoldSet& gold) {
  StatsReport stats;
  for (const auto& tuple : gold.tuples) {
    ++stats.tuples;

    bool anaphoric = false;
    bool inferred = false;
    int args = 0;
    for (const auto& [slot, part] : tuple.parts) {
      if (slot != Slot::rel && !part.tokens.empty()) ++args;
      if (part.resolved_text) anaphoric = true;
      for (const auto& token : part.tokens) {
        ++stats.total_tokens;
        if (token.inferred) {
          ++stats.inferred_tokens;
          inferred = true;
        }
      }
    }
    if (anaphoric) ++stats.with_anaphora;
    if (inferred) ++stats.with_inferred;

    const Part* rel = tuple.part(Slot::rel);
    if (rel != nullptr && !rel->tokens.empty() &&
        std::all_of(rel->tokens.begin(), rel->tokens.end(),
                    [](const Token& t) { return t.inferred; }))
      ++stats.hallucinated;

    ++stats.arity_histogram[std::min(args, 5)];
  }
  return stats;
}

PredictionSet gold_as_predictions(const GoldSet& gold) {
  PredictionSet preds;
  preds.system_name = "self";
  for (const auto& tuple : gold.tuples) {
    TupleRecord copy;
    copy.sentence_id = tuple.sentence_id;
    copy.confidence = 1.0;
    for (const auto& [slot, part] : tuple.parts) {
      Part plain;
      plain.slot = slot;
      for (const auto& token : part.tokens)
        plain.tokens.push_back(Token{token.text, std::nullopt, false});
      if (!plain.tokens.empty()) copy.parts[slot] = std::move(plain);
    }
    preds.tuples.push_back(std::move(copy));
  }
  return preds;
}

}  // namespace oie
