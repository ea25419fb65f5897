/* Copyright 2026 The SceneQA Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "sceneqa/templates.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "sceneqa/common.h"
#include "sceneqa/relation.h"

namespace sceneqa {

std::string Slot::token() const {
  std::string out;
  switch (kind) {
    case SlotKind::attribute:
      out = "A";
      break;
    case SlotKind::object:
      out = "O";
      break;
    case SlotKind::relation:
      out = "R";
      break;
  }
  if (index > 1) out += std::to_string(index);
  return out;
}

std::optional<Slot> Slot::parse(std::string_view token) {
  if (token.empty()) return std::nullopt;
  SlotKind kind;
  switch (token[0]) {
    case 'A':
      kind = SlotKind::attribute;
      break;
    case 'O':
      kind = SlotKind::object;
      break;
    case 'R':
      kind = SlotKind::relation;
      break;
    default:
      return std::nullopt;
  }
  int index = 1;
  if (token.size() > 1) {
    index = 0;
    for (char c : token.substr(1)) {
      if (c < '0' || c > '9') return std::nullopt;
      index = index * 10 + (c - '0');
    }
    if (index < 2) return std::nullopt;  // "A1" is written "A"
  }
  return Slot{kind, index};
}

namespace {

constexpr std::string_view kQTypeTokens[kQTypeCount] = {
    "exist", "count", "query_object", "query_status", "comparison",
};

struct OpInfo {
  std::string_view token;
  std::optional<SlotKind> arg_kind;
};

const OpInfo& op_info(OpCode code) {
  static const OpInfo kInfo[] = {
      {"scene", std::nullopt},
      {"filter_status", SlotKind::attribute},
      {"filter_category", SlotKind::object},
      {"relate", SlotKind::relation},
      {"unique", std::nullopt},
      {"same_status_set", std::nullopt},
      {"intersect", std::nullopt},
      {"count", std::nullopt},
      {"exist", std::nullopt},
      {"query_category", std::nullopt},
      {"query_status", std::nullopt},
      {"compare_status_equal", std::nullopt},
  };
  return kInfo[static_cast<int>(code)];
}

constexpr OpCode kAllOps[] = {
    OpCode::scene,          OpCode::filter_status,
    OpCode::filter_category, OpCode::relate,
    OpCode::unique,         OpCode::same_status_set,
    OpCode::intersect,      OpCode::count,
    OpCode::exist,          OpCode::query_category,
    OpCode::query_status,   OpCode::compare_status_equal,
};

bool is_terminal(OpCode code) {
  switch (code) {
    case OpCode::count:
    case OpCode::exist:
    case OpCode::query_category:
    case OpCode::query_status:
    case OpCode::compare_status_equal:
      return true;
    default:
      return false;
  }
}

AnswerType terminal_answer_type(OpCode code) {
  switch (code) {
    case OpCode::count:
      return AnswerType::integer;
    case OpCode::exist:
    case OpCode::compare_status_equal:
      return AnswerType::boolean;
    case OpCode::query_category:
      return AnswerType::category;
    case OpCode::query_status:
      return AnswerType::status;
    default:
      return AnswerType::boolean;
  }
}

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw ParseError(context.empty() ? what : context + ": " + what);
}

}  // namespace

std::string_view qtype_token(QType q) {
  return kQTypeTokens[static_cast<int>(q)];
}

std::optional<QType> qtype_from_token(std::string_view token) {
  for (int i = 0; i < kQTypeCount; ++i) {
    if (kQTypeTokens[i] == token) return static_cast<QType>(i);
  }
  return std::nullopt;
}

AnswerType answer_type_for(QType q) {
  switch (q) {
    case QType::exist:
    case QType::comparison:
      return AnswerType::boolean;
    case QType::count:
      return AnswerType::integer;
    case QType::query_object:
      return AnswerType::category;
    case QType::query_status:
      return AnswerType::status;
  }
  return AnswerType::boolean;
}

std::string ProgramOp::token() const {
  std::string out{op_info(code).token};
  if (arg) {
    out += "(" + arg->token() + ")";
  }
  return out;
}

const QuestionTemplate* Registry::find(std::string_view template_id) const {
  for (const QuestionTemplate& t : templates) {
    if (t.template_id == template_id) return &t;
  }
  return nullptr;
}

int Registry::total_variants() const {
  int n = 0;
  for (const QuestionTemplate& t : templates) n += t.variant_count();
  return n;
}

namespace {

ProgramOp parse_op_token(std::string_view token, const std::string& context) {
  std::string_view name = token;
  std::optional<std::string_view> arg_text;
  if (auto open = token.find('('); open != std::string_view::npos) {
    if (token.back() != ')') fail(context, "malformed op '" + std::string(token) + "'");
    name = token.substr(0, open);
    arg_text = token.substr(open + 1, token.size() - open - 2);
  }
  for (OpCode code : kAllOps) {
    const OpInfo& info = op_info(code);
    if (info.token != name) continue;
    ProgramOp op{code, std::nullopt};
    if (info.arg_kind.has_value() != arg_text.has_value()) {
      fail(context, "op '" + std::string(name) +
                        (info.arg_kind ? "' requires a slot argument"
                                       : "' takes no argument"));
    }
    if (arg_text) {
      auto slot = Slot::parse(*arg_text);
      if (!slot || slot->kind != *info.arg_kind) {
        fail(context, "op '" + std::string(name) + "' has invalid slot '" +
                          std::string(*arg_text) + "'");
      }
      op.arg = slot;
    }
    return op;
  }
  fail(context, "unknown op '" + std::string(token) + "'");
}

// Abstract stack simulation: checks the dataflow and derives slot metadata.
void validate_program(QuestionTemplate& tmpl, const std::string& context) {
  enum class Val { set, object };
  std::vector<Val> stack;
  const auto& ops = tmpl.program.ops;
  if (ops.empty()) fail(context, "empty program");

  std::set<Slot> seen_slots;
  int relate_count = 0;
  std::optional<Slot> last_attribute;  // pending filter_status arg
  std::optional<Slot> last_category;   // most recent filter_category arg

  auto need = [&](std::size_t n, OpCode code) {
    if (stack.size() < n) {
      fail(context, "ill-typed program: '" +
                        std::string(op_info(code).token) +
                        "' lacks its input");
    }
  };
  auto need_top = [&](Val v, OpCode code) {
    need(1, code);
    if (stack.back() != v) {
      fail(context, "ill-typed program: '" +
                        std::string(op_info(code).token) +
                        "' applied to the wrong value kind");
    }
  };

  for (std::size_t i = 0; i < ops.size(); ++i) {
    const ProgramOp& op = ops[i];
    if (is_terminal(op.code) && i + 1 != ops.size()) {
      fail(context, "terminal op is not last");
    }
    if (op.arg) {
      if (!seen_slots.insert(*op.arg).second) {
        fail(context, "slot '" + op.arg->token() + "' bound by two ops");
      }
      tmpl.slots.push_back(*op.arg);
    }
    switch (op.code) {
      case OpCode::scene:
        stack.push_back(Val::set);
        last_attribute.reset();
        last_category.reset();
        break;
      case OpCode::filter_status:
        need_top(Val::set, op.code);
        last_attribute = op.arg;
        break;
      case OpCode::filter_category:
        need_top(Val::set, op.code);
        if (last_attribute) {
          tmpl.attr_object_pairs.emplace_back(*last_attribute, *op.arg);
          last_attribute.reset();
        }
        last_category = op.arg;
        break;
      case OpCode::relate:
        need_top(Val::object, op.code);
        stack.back() = Val::set;
        ++relate_count;
        break;
      case OpCode::unique: {
        need_top(Val::set, op.code);
        stack.back() = Val::object;
        const bool feeds_relate =
            i + 1 < ops.size() && ops[i + 1].code == OpCode::relate;
        if (feeds_relate && last_category) {
          tmpl.me_eligible.push_back(*last_category);
        }
        break;
      }
      case OpCode::same_status_set:
        need_top(Val::object, op.code);
        stack.back() = Val::set;
        last_category.reset();
        break;
      case OpCode::intersect:
        need(2, op.code);
        if (stack.back() != Val::set ||
            stack[stack.size() - 2] != Val::set) {
          fail(context, "ill-typed program: intersect needs two sets");
        }
        stack.pop_back();
        break;
      case OpCode::count:
      case OpCode::exist:
        need_top(Val::set, op.code);
        stack.pop_back();
        break;
      case OpCode::query_category:
        need_top(Val::object, op.code);
        stack.pop_back();
        if (last_category) tmpl.queried_object = last_category;
        break;
      case OpCode::query_status:
        need_top(Val::object, op.code);
        stack.pop_back();
        break;
      case OpCode::compare_status_equal:
        need(2, op.code);
        if (stack.back() != Val::object ||
            stack[stack.size() - 2] != Val::object) {
          fail(context, "ill-typed program: comparison needs two objects");
        }
        stack.pop_back();
        stack.pop_back();
        break;
    }
  }

  if (!is_terminal(ops.back().code)) {
    fail(context, "program lacks a terminal op");
  }
  if (!stack.empty()) {
    fail(context, "program leaves unconsumed values");
  }
  if (terminal_answer_type(ops.back().code) != tmpl.answer_type) {
    fail(context, "terminal op does not produce the qtype's answer type");
  }
  const int expected_hop = relate_count > 0 ? 1 : 0;
  if (tmpl.hop != expected_hop) {
    fail(context, "hop " + std::to_string(tmpl.hop) +
                      " inconsistent with program relate count");
  }
}

std::vector<VariantSegment> tokenize_variant(const std::string& text,
                                             const std::vector<Slot>& slots,
                                             const std::string& context) {
  std::vector<VariantSegment> segments;
  std::set<Slot> referenced;
  std::string literal;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      literal += text[i++];
      continue;
    }
    const auto close = text.find('>', i);
    if (close == std::string::npos) {
      fail(context, "unterminated placeholder");
    }
    const std::string token = text.substr(i + 1, close - i - 1);
    const auto slot = Slot::parse(token);
    if (!slot) fail(context, "unknown placeholder '<" + token + ">'");
    if (std::find(slots.begin(), slots.end(), *slot) == slots.end()) {
      fail(context, "dangling placeholder '<" + token +
                        ">' not bound by the program");
    }
    referenced.insert(*slot);
    if (!literal.empty()) {
      segments.push_back({std::move(literal), std::nullopt, false});
      literal.clear();
    }
    VariantSegment seg{"", slot, false};
    i = close + 1;
    if (i < text.size() && text[i] == 's' && slot->kind == SlotKind::object) {
      seg.plural = true;
      ++i;
    }
    segments.push_back(seg);
  }
  if (!literal.empty()) {
    segments.push_back({std::move(literal), std::nullopt, false});
  }
  for (const Slot& s : slots) {
    if (!referenced.count(s)) {
      fail(context, "variant does not reference slot '" + s.token() + "'");
    }
  }
  return segments;
}

}  // namespace

Registry parse_registry_text(std::string_view text) {
  Registry registry;
  std::set<std::string> ids;

  std::optional<QuestionTemplate> current;
  bool saw_qtype = false, saw_hop = false, saw_program = false;
  int line_no = 0;

  std::istringstream stream{std::string(text)};
  std::string raw;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    line = line.substr(first);
    const std::string context = "line " + std::to_string(line_no);

    const auto space = line.find(' ');
    const std::string key = line.substr(0, space);
    const std::string value =
        space == std::string::npos ? "" : line.substr(space + 1);

    if (key == "template") {
      if (current) fail(context, "nested template block");
      if (value.empty()) fail(context, "template without id");
      if (!ids.insert(value).second) {
        fail(context, "duplicate template_id '" + value + "'");
      }
      current.emplace();
      current->template_id = value;
      saw_qtype = saw_hop = saw_program = false;
      continue;
    }
    if (!current) fail(context, "directive outside a template block");

    if (key == "qtype") {
      const auto q = qtype_from_token(value);
      if (!q) fail(context, "unknown qtype '" + value + "'");
      current->qtype = *q;
      current->answer_type = answer_type_for(*q);
      saw_qtype = true;
    } else if (key == "hop") {
      if (value != "0" && value != "1") fail(context, "hop must be 0 or 1");
      current->hop = value == "1" ? 1 : 0;
      saw_hop = true;
    } else if (key == "program") {
      std::istringstream ops{value};
      std::string token;
      while (ops >> token) {
        current->program.ops.push_back(parse_op_token(token, context));
      }
      saw_program = true;
    } else if (key == "variant") {
      if (value.empty()) fail(context, "empty variant");
      current->variant_texts.push_back(value);
    } else if (key == "end") {
      if (!saw_qtype || !saw_hop || !saw_program) {
        fail(context, "template '" + current->template_id + "' incomplete");
      }
      if (current->variant_texts.empty()) {
        fail(context, "template '" + current->template_id +
                          "' has no variants");
      }
      const std::string tcontext = "template '" + current->template_id + "'";
      validate_program(*current, tcontext);
      for (const std::string& vtext : current->variant_texts) {
        current->variants.push_back(
            tokenize_variant(vtext, current->slots, tcontext));
      }
      registry.templates.push_back(std::move(*current));
      current.reset();
    } else {
      fail(context, "unknown directive '" + key + "'");
    }
  }
  if (current) {
    throw ParseError("unterminated template '" + current->template_id + "'");
  }
  return registry;
}

Registry parse_registry_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open registry file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_registry_text(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string registry_to_text(const Registry& registry) {
  std::string out;
  bool first = true;
  for (const QuestionTemplate& t : registry.templates) {
    if (!first) out += "\n";
    first = false;
    out += "template " + t.template_id + "\n";
    out += "qtype " + std::string(qtype_token(t.qtype)) + "\n";
    out += "hop " + std::to_string(t.hop) + "\n";
    out += "program";
    for (const ProgramOp& op : t.program.ops) out += " " + op.token();
    out += "\n";
    for (const std::string& v : t.variant_texts) out += "variant " + v + "\n";
    out += "end\n";
  }
  return out;
}

Registry default_registry() {
  return parse_registry_text(default_registry_text());
}

void Binding::set(Slot slot, std::string value) {
  auto it = std::lower_bound(
      values_.begin(), values_.end(), slot,
      [](const auto& entry, const Slot& s) { return entry.first < s; });
  if (it != values_.end() && it->first == slot) {
    it->second = std::move(value);
  } else {
    values_.insert(it, {slot, std::move(value)});
  }
}

const std::string* Binding::find(Slot slot) const {
  auto it = std::lower_bound(
      values_.begin(), values_.end(), slot,
      [](const auto& entry, const Slot& s) { return entry.first < s; });
  if (it != values_.end() && it->first == slot) return &it->second;
  return nullptr;
}

const std::string& Binding::at(Slot slot) const {
  const std::string* v = find(slot);
  if (!v) throw Error("binding is missing slot '" + slot.token() + "'");
  return *v;
}

bool Binding::covers(const std::vector<Slot>& slots) const {
  for (const Slot& s : slots) {
    if (!find(s)) return false;
  }
  return true;
}

std::string Binding::canonical() const {
  std::string out;
  for (const auto& [slot, value] : values_) {
    if (!out.empty()) out += ";";
    out += slot.token() + "=" + value;
  }
  return out;
}

namespace {

bool word_boundary_before(const std::string& s, std::size_t pos) {
  return pos == 0 || s[pos - 1] == ' ';
}

bool word_boundary_after(const std::string& s, std::size_t pos) {
  if (pos >= s.size()) return true;
  const char c = s[pos];
  return c == ' ' || c == '?' || c == ';' || c == '.' || c == ',';
}

void replace_word(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    if (word_boundary_before(s, pos) &&
        word_boundary_after(s, pos + from.size())) {
      s.replace(pos, from.size(), to);
      pos += to.size();
    } else {
      ++pos;
    }
  }
}

void collapse_spaces(std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == ' ' && !out.empty() && out.back() == ' ') continue;
    out += c;
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  s = std::move(out);
}

}  // namespace

std::string render(const QuestionTemplate& tmpl, int variant_index,
                   const Binding& binding, const Taxonomy& taxonomy) {
  if (variant_index < 0 || variant_index >= tmpl.variant_count()) {
    throw Error("variant index out of range for template '" +
                tmpl.template_id + "'");
  }
  if (!binding.covers(tmpl.slots)) {
    throw Error("incomplete binding for template '" + tmpl.template_id + "'");
  }

  std::string text;
  for (const VariantSegment& seg : tmpl.variants[variant_index]) {
    if (!seg.slot) {
      text += seg.literal;
      continue;
    }
    const std::string& value = binding.at(*seg.slot);
    switch (seg.slot->kind) {
      case SlotKind::attribute:
        text += value;  // may be empty: no status constraint
        break;
      case SlotKind::object:
        text += seg.plural ? taxonomy.plural(value) : value;
        break;
      case SlotKind::relation: {
        const auto rel = relation_from_token(value);
        if (!rel) {
          throw Error("binding holds unknown relation '" + value + "'");
        }
        text += relation_display(*rel);
        break;
      }
    }
  }

  collapse_spaces(text);
  // Determiner fixes for the ego reference.
  replace_word(text, "the me", "me");
  replace_word(text, "a me", "me");
  replace_word(text, "me's", "my");
  return text;
}

}  // namespace sceneqa
