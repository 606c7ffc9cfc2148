#include "headliner/text_pipeline.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_set>

#include "headliner/text.hpp"

namespace headliner {

namespace {

constexpr std::array<std::string_view, 5> kAbbreviations = {"Mr.", "Mrs.", "Ms.",
                                                            "Dr.", "St."};
constexpr std::array<std::string_view, 8> kHonorifics = {
    "mr.", "mrs.", "ms.", "dr.", "mr", "mrs", "ms", "dr"};

constexpr std::string_view kAsciiPeel = ".,!?;:\"'()";
constexpr std::array<std::string_view, 4> kUtf8Peel = {"“", "”", "‘", "’"};

// Capitalised words that are never entity names on their own.
const std::unordered_set<std::string>& capitalized_stopwords() {
  static const std::unordered_set<std::string> words = {
      "monday", "tuesday", "wednesday", "thursday", "friday", "saturday",
      "sunday", "january", "february", "march", "april", "may", "june",
      "july", "august", "september", "october", "november", "december",
      "i", "a", "an", "the", "this", "that", "these", "those", "it", "its",
      "he", "she", "we", "they", "his", "her", "their", "our", "but", "and",
      "or", "if", "in", "on", "at", "of", "for", "from", "to", "with", "as",
      "by", "after", "before", "when", "while", "there", "here", "some",
      "many", "most", "all", "no", "yes", "not", "however", "meanwhile"};
  return words;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Length of a peelable punctuation character starting at `pos`, or 0.
std::size_t peel_at(std::string_view s, std::size_t pos) {
  if (kAsciiPeel.find(s[pos]) != std::string_view::npos) return 1;
  for (auto p : kUtf8Peel) {
    if (s.substr(pos, p.size()) == p) return p.size();
  }
  return 0;
}

// Length of a peelable punctuation character ending at `end`, or 0.
std::size_t peel_before(std::string_view s, std::size_t begin, std::size_t end) {
  if (kAsciiPeel.find(s[end - 1]) != std::string_view::npos) return 1;
  for (auto p : kUtf8Peel) {
    if (end - begin >= p.size() && s.substr(end - p.size(), p.size()) == p) {
      return p.size();
    }
  }
  return 0;
}

bool is_abbreviation(std::string_view token) {
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), token) !=
         kAbbreviations.end();
}

bool is_terminator(std::string_view token) {
  if (token.empty()) return false;
  char last = token.back();
  if (last != '.' && last != '!' && last != '?') return false;
  return !is_abbreviation(token);
}

bool is_closer(std::string_view token) {
  return token == "\"" || token == "'" || token == ")" || token == "”" ||
         token == "’";
}

bool is_roman_numeral(std::string_view token) {
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return c == 'I' || c == 'V' || c == 'X'; });
}

std::string slice(std::string_view source, std::span<const Token> tokens,
                  TokenSpan span) {
  auto begin = tokens[span.first].char_start;
  auto end = tokens[span.last].char_end;
  return std::string(source.substr(begin, end - begin));
}

std::vector<std::string_view> words_of(std::span<const Token> tokens,
                                       std::size_t first, std::size_t last) {
  std::vector<std::string_view> out;
  out.reserve(last - first + 1);
  for (auto i = first; i <= last; ++i) out.emplace_back(tokens[i].text);
  return out;
}

std::vector<std::string> split_words(const std::string& key) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    auto next = key.find(' ', pos);
    if (next == std::string::npos) next = key.size();
    if (next > pos) out.push_back(key.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::string join_words(const std::vector<std::string>& words, std::size_t from) {
  std::string out;
  for (auto i = from; i < words.size(); ++i) {
    if (!out.empty()) out.push_back(' ');
    out += words[i];
  }
  return out;
}

}  // namespace

bool is_honorific(std::string_view token) {
  auto lower = to_lower(token);
  return std::find(kHonorifics.begin(), kHonorifics.end(), lower) !=
         kHonorifics.end();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  auto emit = [&](std::size_t b, std::size_t e) {
    out.push_back(Token{std::string(text.substr(b, e - b)), b, e, 0});
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t begin = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    std::size_t end = pos;

    while (begin < end) {
      auto n = peel_at(text, begin);
      if (n == 0) break;
      emit(begin, begin + n);
      begin += n;
    }

    std::vector<std::pair<std::size_t, std::size_t>> trailing;
    while (end > begin) {
      auto n = peel_before(text, begin, end);
      if (n == 0) break;
      if (text[end - 1] == '.' && is_abbreviation(text.substr(begin, end - begin))) {
        break;
      }
      trailing.emplace_back(end - n, end);
      end -= n;
    }
    if (begin < end) emit(begin, end);
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
      emit(it->first, it->second);
    }
  }
  return out;
}

std::vector<Token> split_sentences(std::vector<Token> tokens) {
  std::size_t sentence = 0;
  bool pending = false;
  for (auto& tok : tokens) {
    if (pending && !is_terminator(tok.text) && !is_closer(tok.text)) {
      ++sentence;
      pending = false;
    }
    tok.sentence_index = sentence;
    if (is_terminator(tok.text)) pending = true;
  }
  return tokens;
}

std::vector<Token> tokenize_sentences(std::string_view text) {
  return split_sentences(tokenize(text));
}

std::vector<EntityMention> detect_entities(std::string_view source,
                                           std::span<const Token> tokens,
                                           const EntityResources& resources) {
  const std::size_t n = tokens.size();
  std::vector<EntityMention> out;
  std::vector<bool> used(n, false);

  auto is_word = [&](std::size_t i) { return !is_punctuation_token(tokens[i].text); };
  auto same_sentence = [&](std::size_t a, std::size_t b) {
    return tokens[a].sentence_index == tokens[b].sentence_index;
  };

  std::vector<bool> initial(n, false);
  {
    bool seen_word = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && !same_sentence(i - 1, i)) seen_word = false;
      if (!seen_word && is_word(i)) {
        initial[i] = true;
        seen_word = true;
      }
    }
  }

  auto add = [&](std::size_t first, std::size_t last, EntityClass cls) {
    for (auto i = first; i <= last; ++i) used[i] = true;
    TokenSpan span{first, last};
    out.push_back(EntityMention{slice(source, tokens, span), cls, span});
  };

  auto is_first_name = [&](std::size_t i) {
    return resources.first_names.contains(std::string_view(tokens[i].text));
  };

  // Gazetteer longest match.
  std::size_t max_len = 0;
  for (const auto& g : resources.gazetteers) max_len = std::max(max_len, g.max_tokens());
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_word(i)) continue;
    std::size_t match_last = 0;
    const Gazetteer* match = nullptr;
    for (auto len = std::min(max_len, n - i); len >= 1 && match == nullptr; --len) {
      auto j = i + len - 1;
      if (!same_sentence(i, j) || !is_word(j)) continue;
      auto words = words_of(tokens, i, j);
      for (const auto& g : resources.gazetteers) {
        if (g.contains(std::span<const std::string_view>(words))) {
          match = &g;
          match_last = j;
          break;
        }
      }
    }
    if (match == nullptr) continue;
    auto first = i;
    if (match->entity_class() == EntityClass::kPerson) {
      // "Enda" + gazetteer "Kenny" -> "Enda Kenny".
      while (first > 0 && !used[first - 1] && same_sentence(first - 1, first) &&
             is_capitalized(tokens[first - 1].text) && is_first_name(first - 1)) {
        --first;
      }
    }
    add(first, match_last, match->entity_class());
    i = match_last;
  }

  // Acronyms such as "GPO".
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i] && is_acronym(tokens[i].text) && !is_roman_numeral(tokens[i].text)) {
      add(i, i, EntityClass::kOrganization);
    }
  }

  // Capitalised runs. Sentence-initial words only start a run when they are
  // person-like (first name, honorific, or surname of a person seen in the
  // text), so "Kenny said" after "Enda Kenny" still counts. Iterate until
  // the surname set settles.
  std::unordered_set<std::string> surnames;
  auto note_surname = [&](const EntityMention& m) {
    if (m.entity_class != EntityClass::kPerson || m.span.size() < 2) return;
    surnames.insert(to_lower(tokens[m.span.last].text));
  };
  for (const auto& m : out) note_surname(m);

  auto eligible = [&](std::size_t i) {
    return !used[i] && is_word(i) && is_capitalized(tokens[i].text) &&
           !capitalized_stopwords().contains(to_lower(tokens[i].text));
  };
  auto person_like = [&](std::size_t i) {
    return is_first_name(i) || is_honorific(tokens[i].text) ||
           surnames.contains(to_lower(tokens[i].text));
  };

  struct Run {
    std::size_t first, last;
    bool person;
  };
  std::vector<Run> runs;
  for (int round = 0; round < 4; ++round) {
    runs.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!eligible(i) || (initial[i] && !person_like(i))) continue;
      auto j = i;
      while (j + 1 < n && same_sentence(i, j + 1) && eligible(j + 1)) ++j;
      bool person = false;
      bool all_honorific = true;
      for (auto k = i; k <= j; ++k) {
        if (person_like(k)) person = true;
        if (!is_honorific(tokens[k].text)) all_honorific = false;
      }
      if (!all_honorific) runs.push_back(Run{i, j, person});
      i = j;
    }
    auto before = surnames.size();
    for (const auto& r : runs) {
      std::size_t words = 0;
      for (auto k = r.first; k <= r.last; ++k) {
        if (!is_honorific(tokens[k].text)) ++words;
      }
      if (r.person && words >= 2) surnames.insert(to_lower(tokens[r.last].text));
    }
    if (surnames.size() == before) break;
  }
  for (const auto& r : runs) {
    add(r.first, r.last, r.person ? EntityClass::kPerson : EntityClass::kOrganization);
  }

  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.span < b.span; });
  return out;
}

std::vector<KeywordMention> match_keywords(std::string_view source,
                                           std::span<const Token> tokens,
                                           const KeywordDb& db) {
  std::vector<KeywordMention> out;
  if (db.empty()) return out;
  const std::size_t n = tokens.size();
  std::size_t i = 0;
  while (i < n) {
    if (is_punctuation_token(tokens[i].text)) {
      ++i;
      continue;
    }
    bool found = false;
    for (auto len = std::min(kMaxKeywordTokens, n - i); len >= 1; --len) {
      auto j = i + len - 1;
      if (tokens[j].sentence_index != tokens[i].sentence_index) continue;
      if (is_punctuation_token(tokens[j].text)) continue;
      std::string joined;
      for (auto k = i; k <= j; ++k) {
        if (k > i) joined.push_back(' ');
        joined += tokens[k].text;
      }
      auto key = normalize_key(joined);
      if (db.contains(key)) {
        TokenSpan span{i, j};
        out.push_back(KeywordMention{slice(source, tokens, span), key, span});
        i = j + 1;
        found = true;
        break;
      }
    }
    if (!found) ++i;
  }
  return out;
}

namespace {

struct Mention {
  TokenSpan span;
  std::string surface;
  std::optional<EntityClass> cls;
};

struct Group {
  std::string key;
  std::vector<std::size_t> members;  // indices into the mention list
  std::optional<EntityClass> cls;
  bool honorific = false;
  bool alive = true;
};

bool starts_with_honorific(const std::string& surface) {
  auto words = split_words(normalize_key(surface));
  return words.size() > 1 && is_honorific(words.front());
}

// normalize_key with leading honorifics removed.
std::string resolution_key(const std::string& surface) {
  auto words = split_words(normalize_key(surface));
  std::size_t from = 0;
  while (from + 1 < words.size() && is_honorific(words[from])) ++from;
  return join_words(words, from);
}

std::string last_word(const std::string& key) {
  auto pos = key.rfind(' ');
  return pos == std::string::npos ? key : key.substr(pos + 1);
}

}  // namespace

std::vector<ResolvedKeyword> resolve_mentions(
    std::span<const EntityMention> entities,
    std::span<const KeywordMention> keywords) {
  std::vector<Mention> all;
  all.reserve(entities.size() + keywords.size());
  for (const auto& e : entities) all.push_back(Mention{e.span, e.surface, e.entity_class});
  for (const auto& k : keywords) all.push_back(Mention{k.span, k.surface, std::nullopt});
  // Outer spans first, entities before keywords on identical spans.
  std::stable_sort(all.begin(), all.end(), [](const Mention& a, const Mention& b) {
    if (a.span.first != b.span.first) return a.span.first < b.span.first;
    if (a.span.last != b.span.last) return a.span.last > b.span.last;
    return a.cls.has_value() && !b.cls.has_value();
  });

  // Span deduplication: identical or nested spans collapse into the outer one.
  std::vector<Mention> kept;
  for (auto& m : all) {
    auto outer = std::find_if(kept.rbegin(), kept.rend(), [&](const Mention& k) {
      return k.span.contains(m.span);
    });
    if (outer != kept.rend()) {
      if (!outer->cls) outer->cls = m.cls;
      continue;
    }
    kept.push_back(std::move(m));
  }

  // Rules 1 and 2: same key after case folding and honorific stripping.
  std::vector<Group> groups;
  std::map<std::string, std::size_t> by_key;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    auto key = resolution_key(kept[i].surface);
    auto [it, inserted] = by_key.try_emplace(key, groups.size());
    if (inserted) groups.push_back(Group{key, {}, std::nullopt});
    auto& g = groups[it->second];
    g.members.push_back(i);
    if (!g.cls) g.cls = kept[i].cls;
    if (starts_with_honorific(kept[i].surface)) g.honorific = true;
  }

  // Rule 3: "Kenny" joins "Enda Kenny" when that is the only candidate.
  for (auto& g : groups) {
    if (g.key.find(' ') != std::string::npos) continue;
    bool person_like = g.honorific || !g.cls || *g.cls == EntityClass::kPerson;
    if (!person_like) continue;
    Group* target = nullptr;
    int candidates = 0;
    for (auto& h : groups) {
      if (&h == &g || !h.alive || h.key.find(' ') == std::string::npos) continue;
      if (h.cls != EntityClass::kPerson || last_word(h.key) != g.key) continue;
      target = &h;
      ++candidates;
    }
    if (candidates != 1) continue;
    target->members.insert(target->members.end(), g.members.begin(), g.members.end());
    g.alive = false;
  }

  std::vector<ResolvedKeyword> out;
  for (auto& g : groups) {
    if (!g.alive) continue;
    std::sort(g.members.begin(), g.members.end(), [&](std::size_t a, std::size_t b) {
      return kept[a].span < kept[b].span;
    });
    ResolvedKeyword rk;
    rk.entity_class = g.cls;
    const std::string* best = nullptr;
    bool best_plain = false;
    for (auto idx : g.members) {
      const auto& m = kept[idx];
      rk.positions.push_back(m.span);
      rk.variants.insert(m.surface);
      bool plain = !starts_with_honorific(m.surface);
      // Longest surface wins, preferring forms without an honorific; ties
      // keep the earliest occurrence.
      if (best == nullptr || (plain && !best_plain) ||
          (plain == best_plain && m.surface.size() > best->size())) {
        best = &m.surface;
        best_plain = plain;
      }
    }
    rk.canonical = *best;
    rk.occurrence_count = rk.positions.size();
    out.push_back(std::move(rk));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.positions.front() < b.positions.front();
  });
  return out;
}

std::vector<ResolvedKeyword> extract_keywords(std::string_view text,
                                              const KeywordDb& db,
                                              const EntityResources& resources) {
  auto tokens = tokenize_sentences(text);
  auto entities = detect_entities(text, tokens, resources);
  auto keywords = match_keywords(text, tokens, db);
  return resolve_mentions(entities, keywords);
}

}  // namespace headliner
