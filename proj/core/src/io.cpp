#include "agorum/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "agorum/error.hpp"

namespace agorum {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment removed, surrounding blanks trimmed
  std::size_t offset;  // columns trimmed from the left
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::size_t first = raw.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const std::size_t last = raw.find_last_not_of(" \t\r");
      out.push_back({number, std::string(raw.substr(first, last - first + 1)), first});
    }
    start = end + 1;
  }
  return out;
}

Formula parse_on_line(std::string_view text, const Line& line, std::size_t extra_offset) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    const std::string message = colon == std::string::npos ? what : what.substr(colon + 2);
    throw ParseError(message, e.column() + line.offset + extra_offset, line.number);
  }
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Agenda parse_agenda(std::string_view text) {
  constexpr std::string_view tag = "premise:";
  std::vector<Formula> positives;
  std::vector<bool> premises;
  bool any_premise = false;
  for (const Line& line : content_lines(text)) {
    std::string_view body = line.text;
    std::size_t skipped = 0;
    const bool premise = body.starts_with(tag);
    if (premise) {
      body.remove_prefix(tag.size());
      skipped = tag.size();
      any_premise = true;
    }
    positives.push_back(parse_on_line(body, line, skipped));
    premises.push_back(premise);
  }
  if (positives.empty()) throw Error(ErrorCode::invalid_agenda, "agenda file has no formulas");
  if (any_premise) return Agenda(std::move(positives), std::move(premises));
  return Agenda(std::move(positives));
}

std::string write_agenda(const Agenda& agenda) {
  std::string out;
  for (std::size_t i = 0; i < agenda.size(); ++i) {
    if (agenda.is_premise(i)) out += "premise: ";
    out += to_string(agenda.positive(i)) + "\n";
  }
  return out;
}

Profile parse_profile(std::string_view text, const Agenda& agenda) {
  std::vector<JudgmentSet> agents;
  for (const Line& line : content_lines(text)) {
    const std::string row = "row " + std::to_string(agents.size() + 1) + " (line " + std::to_string(line.number) + ")";
    if (line.text.find_first_not_of("01") != std::string::npos)
      throw Error(ErrorCode::invalid_profile, row + " may only contain 0 and 1", line.text);
    if (line.text.size() != agenda.size())
      throw Error(ErrorCode::invalid_profile, row + " has " + std::to_string(line.text.size()) +
                                                  " columns, agenda has " + std::to_string(agenda.size()),
                  line.text);
    agents.push_back(JudgmentSet::from_string(line.text));
  }
  if (agents.size() < 3 || agents.size() % 2 == 0)
    throw Error(ErrorCode::invalid_profile,
                "profile needs an odd number of agents, at least 3; got " + std::to_string(agents.size()));
  return Profile(agenda, std::move(agents));
}

std::string write_profile(const Profile& profile) {
  std::string out;
  for (const JudgmentSet& j : profile.agents()) out += j.to_string() + "\n";
  return out;
}

PreferenceProfile parse_preferences(std::string_view text) {
  PreferenceProfile pp;
  for (const Line& line : content_lines(text)) {
    std::vector<std::string> order;
    std::size_t start = 0;
    const std::string& s = line.text;
    while (true) {
      const std::size_t gt = s.find('>', start);
      std::string name = s.substr(start, gt == std::string::npos ? std::string::npos : gt - start);
      const std::size_t first = name.find_first_not_of(" \t");
      const std::size_t last = name.find_last_not_of(" \t");
      name = first == std::string::npos ? "" : name.substr(first, last - first + 1);
      if (!is_identifier(name))
        throw ParseError("expected a candidate name", start + line.offset + 1, line.number);
      order.push_back(std::move(name));
      if (gt == std::string::npos) break;
      start = gt + 1;
    }
    if (pp.orders.empty()) pp.candidates = order;
    pp.orders.push_back(std::move(order));
  }
  if (pp.orders.empty()) throw Error(ErrorCode::invalid_argument, "preference file has no voters");
  validate(pp);
  return pp;
}

std::string write_preferences(const PreferenceProfile& pp) {
  std::string out;
  for (const auto& order : pp.orders) {
    for (std::size_t i = 0; i < order.size(); ++i) out += (i ? " > " : "") + order[i];
    out += "\n";
  }
  return out;
}

QbfInstance parse_qbf(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.size() != 1) throw Error(ErrorCode::invalid_argument, "QBF file must hold exactly one formula line");
  const Line& line = lines.front();
  const std::size_t colon = line.text.find(':');
  if (colon == std::string::npos) throw ParseError("expected ':' after the quantifier prefix", line.offset + 1, line.number);
  QbfInstance q;
  std::vector<std::string>* target = nullptr;
  bool seen_forall = false, seen_exists = false;
  for (const std::string& w : split_words(line.text.substr(0, colon))) {
    if (w == "forall" && !seen_forall && !seen_exists) {
      target = &q.universal;
      seen_forall = true;
    } else if (w == "exists" && !seen_exists) {
      target = &q.existential;
      seen_exists = true;
    } else if (target && is_identifier(w) && w != "forall" && w != "exists") {
      target->push_back(w);
    } else {
      throw ParseError("unexpected '" + w + "' in quantifier prefix", line.offset + 1, line.number);
    }
  }
  q.matrix = parse_on_line(std::string_view(line.text).substr(colon + 1), line, colon + 1);
  validate(q);
  return q;
}

std::string write_qbf(const QbfInstance& q) {
  std::string out = "forall";
  for (const std::string& v : q.universal) out += " " + v;
  out += " exists";
  for (const std::string& v : q.existential) out += " " + v;
  return out + " : " + to_string(q.matrix) + "\n";
}

QuotaRule parse_quotas(std::string_view text, const Agenda& agenda, std::size_t n) {
  std::vector<QuotaRule::Quotas> quotas;
  for (const Line& line : content_lines(text)) {
    const std::vector<std::string> words = split_words(line.text);
    auto number = [&](const std::string& w) -> std::size_t {
      if (w.empty() || w.size() > 6 || w.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a quota, got '" + w + "'", line.offset + 1, line.number);
      return std::stoul(w);
    };
    if (words.size() != 2) throw ParseError("expected two quotas per line", line.offset + 1, line.number);
    quotas.push_back({number(words[0]), number(words[1])});
  }
  if (quotas.size() != agenda.size())
    throw Error(ErrorCode::invalid_argument, "quota file has " + std::to_string(quotas.size()) +
                                                 " lines, agenda has " + std::to_string(agenda.size()));
  return QuotaRule(n, std::move(quotas));
}

}  // namespace agorum
