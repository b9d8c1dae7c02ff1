#include "slanglex/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "slanglex/corpus.hpp"
#include "slanglex/error.hpp"
#include "slanglex/morphology.hpp"
#include "slanglex/patterns.hpp"
#include "slanglex/phonology.hpp"
#include "slanglex/random.hpp"
#include "slanglex/stats.hpp"
#include "slanglex/text.hpp"

namespace slanglex::pipeline {

using report::csv_field;
using report::format_number;

Summary& Summary::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Summary& Summary::add(std::string key, double value) { return add(std::move(key), format_number(value)); }

Summary& Summary::add(std::string key, std::int64_t value) {
  return add(std::move(key), std::to_string(value));
}

std::string Summary::line() const {
  std::string out = analysis_;
  for (const auto& [k, v] : fields_) {
    out += ' ';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

ReportWriter::ReportWriter(fs::path dir, std::string tool_version, std::uint64_t seed)
    : dir_(std::move(dir)), version_(std::move(tool_version)), seed_(seed) {
  fs::create_directories(dir_);
}

report::Provenance ReportWriter::provenance(std::span<const fs::path> inputs) const {
  report::Provenance p{version_, seed_, {}};
  for (const auto& in : inputs) p.inputs.emplace_back(in.filename().string(), report::digest_file(in));
  return p;
}

void ReportWriter::write(const std::string& name, std::span<const fs::path> inputs,
                         const std::function<void(std::ostream&)>& body) const {
  std::ostringstream buffer;
  report::write_header(buffer, provenance(inputs));
  body(buffer);
  std::ofstream out(dir_ / name, std::ios::binary);
  if (!out) throw Error("cannot write " + (dir_ / name).string());
  out << buffer.str();
  if (!out) throw Error("failed writing " + (dir_ / name).string());
}

namespace {

std::vector<std::string> class_names() {
  std::vector<std::string> out;
  for (auto c : kSlangClasses) out.emplace_back(to_string(c));
  return out;
}

std::vector<std::string> subject_names() {
  std::vector<std::string> out;
  for (auto s : kSubjects) out.emplace_back(to_string(s));
  return out;
}

void write_report_pair(const ReportWriter& writer, const std::string& stem,
                       std::span<const fs::path> inputs, const stats::ClassificationReport& r) {
  writer.write("metrics_" + stem + ".csv", inputs, [&](std::ostream& o) { stats::write_metrics_csv(o, r); });
  writer.write("confusion_" + stem + ".csv", inputs,
               [&](std::ostream& o) { stats::write_confusion_csv(o, r.confusion); });
}

// Headword tokens that carry letters; hyphens and spaces separate tokens.
std::vector<std::string> headword_tokens(std::span<const corpus::LexiconEntry> entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    for (auto& tok : text::split_any(e.headword, " \t-")) {
      if (std::any_of(tok.begin(), tok.end(), [](char c) { return text::is_alpha(c); })) {
        out.push_back(std::move(tok));
      }
    }
  }
  return out;
}

std::vector<std::string> read_words(const fs::path& path) {
  const auto ext = path.extension().string();
  std::vector<std::string> out;
  if (ext == ".jsonl") {
    for (const auto& e : corpus::load_slang_jsonl(path)) out.push_back(e.headword);
    return out;
  }
  if (ext == ".tsv") {
    for (const auto& r : corpus::load_gold_tsv(path)) out.push_back(r.word);
    return out;
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    auto t = text::trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

// Stratified by label: each label with n >= 2 sends clamp(round(n f), 1, n-1)
// items to test; singletons stay in train.
template <typename Item, typename LabelOf>
std::pair<std::vector<Item>, std::vector<Item>> stratified_split(std::vector<Item> items, double fraction,
                                                                 std::uint64_t seed, LabelOf label_of) {
  std::map<decltype(label_of(items.front())), std::vector<Item>> groups;
  for (auto& it : items) groups[label_of(it)].push_back(std::move(it));
  Rng rng(seed);
  std::vector<Item> train, test;
  for (auto& [label, group] : groups) {
    rng.shuffle(group.begin(), group.end());
    const auto n = static_cast<long long>(group.size());
    const auto n_test = n < 2 ? 0 : std::clamp(std::llround(static_cast<double>(n) * fraction), 1LL, n - 1);
    for (long long i = 0; i < n; ++i) (i < n_test ? test : train).push_back(std::move(group[i]));
  }
  return {std::move(train), std::move(test)};
}

}  // namespace

Summary ingest(const IngestOptions& options) {
  Summary s("ingest");
  auto loaded = corpus::load_lexicon(options.input, options.format);
  if (auto* slang = std::get_if<std::vector<corpus::LexiconEntry>>(&loaded)) {
    const auto kept = corpus::filter_by_votes(*slang, options.min_votes);
    corpus::save_slang_jsonl(options.output, kept);
    s.add("format", std::string("slang-jsonl"))
        .add("read", slang->size())
        .add("kept", kept.size())
        .add("min_votes", options.min_votes);
  } else {
    const auto& standard = std::get<corpus::StandardLexicon>(loaded);
    std::ofstream out(options.output, std::ios::binary);
    if (!out) throw Error("cannot write " + options.output.string());
    for (const auto& w : standard.words) {
      auto it = standard.definitions.find(w);
      out << w;
      if (it != standard.definitions.end() && !it->second.empty()) out << '\t' << it->second.front();
      out << '\n';
    }
    s.add("format", std::string("standard-tsv")).add("read", standard.words.size()).add("kept", standard.words.size());
  }
  return s;
}

Summary phonology(const PhonologyOptions& options, const ReportWriter& writer) {
  const auto slang = corpus::load_slang_jsonl(options.slang);
  const auto standard = corpus::load_standard_tsv(options.standard);
  const auto table = phonology::PronouncingTable::load(options.pronouncing);
  const auto rules = phonology::RuleTable::load(options.rules);
  const std::vector<fs::path> inputs{options.slang, options.standard, options.pronouncing, options.rules};

  std::size_t skipped = 0, fallback = 0;
  auto convert = [&](const std::string& word, std::vector<phonology::PhonemeSequence>& into) {
    try {
      into.push_back(phonology::to_phonemes(word, table, rules));
    } catch (const Error&) {
      ++skipped;  // no letters to pronounce
    }
  };
  std::vector<phonology::PhonemeSequence> slang_seqs, std_seqs;
  for (const auto& e : slang) convert(e.headword, slang_seqs);
  for (const auto& w : standard.words) convert(w, std_seqs);
  for (const auto& s : slang_seqs) fallback += s.source == phonology::Source::RuleFallback;
  if (slang_seqs.empty() || std_seqs.empty()) throw Error("phonology needs pronounceable words on both sides");

  const auto odds = phonology::odds_ratio_ranking(phonology::phoneme_distribution(slang_seqs),
                                                  phonology::phoneme_distribution(std_seqs), options.smoothing);
  writer.write("phoneme_odds.csv", inputs, [&](std::ostream& o) { phonology::write_odds_csv(o, odds); });

  std::size_t significant = 0;
  writer.write("manners.csv", inputs, [&](std::ostream& o) {
    o << "position,manner,count_slang,p_slang,count_std,p_std,z,p_value,adjusted_alpha,significant\n";
    for (auto pos : {phonology::Position::First, phonology::Position::Final}) {
      const auto a = phonology::positional_manner_counts(slang_seqs, pos);
      const auto b = phonology::positional_manner_counts(std_seqs, pos);
      for (auto m : phonology::kManners) {
        o << (pos == phonology::Position::First ? "first" : "final") << ',' << phonology::to_string(m) << ','
          << a[m] << ',' << format_number(static_cast<double>(a[m]) / static_cast<double>(a.total)) << ','
          << b[m] << ',' << format_number(static_cast<double>(b[m]) / static_cast<double>(b.total)) << ',';
        const auto pooled = a[m] + b[m];
        if (pooled == 0 || pooled == a.total + b.total) {
          o << ",,,undefined\n";  // z undefined at a pooled proportion of 0 or 1
          continue;
        }
        const auto t = stats::two_proportion_ztest(a[m], a.total, b[m], b.total, options.alpha,
                                                   static_cast<int>(phonology::kManners.size()));
        significant += t.significant;
        o << format_number(t.z) << ',' << format_number(t.p_value) << ',' << format_number(t.adjusted_alpha) << ','
          << (t.significant ? "true" : "false") << '\n';
      }
    }
  });

  writer.write("pronunciations.tsv", inputs, [&](std::ostream& o) {
    for (const auto& s : slang_seqs) {
      o << s.word << '\t' << s.symbols() << '\t'
        << (s.source == phonology::Source::LexiconLookup ? "lexicon" : "rules") << '\n';
    }
  });

  Summary s("phonology");
  s.add("slang_words", slang_seqs.size())
      .add("standard_words", std_seqs.size())
      .add("skipped", skipped)
      .add("rule_fallback", fallback)
      .add("phonemes", odds.rows.size())
      .add("significant_manner_tests", significant);
  if (!odds.rows.empty()) s.add("top_phoneme", odds.rows.front().phoneme).add("top_odds", odds.rows.front().ratio);
  return s;
}

Summary morphology(const MorphologyOptions& options, const ReportWriter& writer) {
  const auto entries = corpus::load_slang_jsonl(options.slang);
  const auto words = headword_tokens(entries);
  if (words.empty()) throw Error("no headword tokens to segment");
  const std::vector<fs::path> inputs{options.slang};

  const auto model = morphology::train_segmenter(words, options.params);
  std::vector<morphology::Segmentation> segs;
  segs.reserve(words.size());
  for (const auto& w : words) segs.push_back(morphology::segment(model, w));

  writer.write("segmenter.tsv", inputs, [&](std::ostream& o) { model.write_tsv(o); });
  writer.write("segmentations.tsv", inputs, [&](std::ostream& o) {
    for (const auto& s : segs) {
      o << s.word << '\t';
      for (std::size_t i = 0; i < s.morphs.size(); ++i) o << (i ? "+" : "") << s.morphs[i];
      o << '\n';
    }
  });
  const auto prefixes = morphology::affix_distribution(segs, morphology::AffixSide::Prefix, options.top_k);
  const auto suffixes = morphology::affix_distribution(segs, morphology::AffixSide::Suffix, options.top_k);
  writer.write("prefixes.csv", inputs, [&](std::ostream& o) { morphology::write_affix_csv(o, prefixes); });
  writer.write("suffixes.csv", inputs, [&](std::ostream& o) { morphology::write_affix_csv(o, suffixes); });

  std::size_t multi = 0;
  for (const auto& s : segs) multi += s.morphs.size() > 1;
  return Summary("morphology")
      .add("words", words.size())
      .add("morph_types", model.morph_counts().size())
      .add("segmented", multi)
      .add("code_length_bits", model.total_code_length())
      .add("iterations", model.cost_history().size())
      .add("prefix_mass_top", prefixes.mass_at(prefixes.entries.size()))
      .add("suffix_mass_top", suffixes.mass_at(suffixes.entries.size()));
}

Summary classes_train(const ClassesTrainOptions& options, const ReportWriter& writer) {
  const auto gold = corpus::load_gold_tsv(options.gold);
  const auto model = slangclass::train_classifier(gold, options.train);
  slangclass::save_model(options.model, model);
  const std::vector<fs::path> inputs{options.gold};
  writer.write("top_features.csv", inputs, [&](std::ostream& o) {
    o << "class,rank,feature,weight\n";
    for (auto c : model.classes) {
      int rank = 0;
      for (const auto& [f, w] : slangclass::top_features(model, c, options.top_k)) {
        o << to_string(c) << ',' << ++rank << ',' << csv_field(f) << ',' << format_number(w) << '\n';
      }
    }
  });
  return Summary("classes-train")
      .add("features", std::string(features::to_string(options.train.kind)))
      .add("records", gold.size())
      .add("vocabulary", model.vocab.size())
      .add("classes", model.classes.size());
}

Summary classes_predict(const ClassesPredictOptions& options, const ReportWriter& writer) {
  const auto model = slangclass::load_model(options.model);
  openset::validate_threshold(options.delta, options.score, model.classes.size());
  const auto words = read_words(options.words);
  auto proba = [&](const std::string& w) { return slangclass::predict_proba(model, w); };
  const auto labels = openset::predict_with_reject<SlangClass, std::string>(
      std::span<const SlangClass>(model.classes), proba, std::span<const std::string>(words), options.delta,
      options.score);

  std::map<std::string, std::size_t> tally;
  writer.write("predictions.csv", std::vector<fs::path>{options.model, options.words}, [&](std::ostream& o) {
    o << "word,label,score\n";
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto label = to_string(labels[i]);
      ++tally[label];
      o << csv_field(words[i]) << ',' << label << ',' << format_number(openset::score(proba(words[i]), options.score))
        << '\n';
    }
  });
  Summary s("classes-predict");
  s.add("words", words.size()).add("delta", options.delta).add("score", std::string(openset::to_string(options.score)));
  for (const auto& name : class_names()) s.add(name, tally[name]);
  s.add(std::string(kRejectedName), tally[std::string(kRejectedName)]);
  return s;
}

Summary classes_eval(const ClassesEvalOptions& options, const ReportWriter& writer) {
  const auto gold = corpus::load_gold_tsv(options.gold);
  openset::validate_threshold(options.delta, options.score, kSlangClasses.size() - 1);
  const std::vector<fs::path> inputs{options.gold};
  const auto split = corpus::split_gold(gold, options.test_fraction, writer.seed());

  auto char_opts = options.train;
  char_opts.kind = features::FeatureKind::CharNgram;
  auto morph_opts = options.train;
  morph_opts.kind = features::FeatureKind::MorphemeNgram;
  const auto char_report = slangclass::evaluate(slangclass::train_classifier(split.train, char_opts), split.test);
  const auto morph_report = slangclass::evaluate(slangclass::train_classifier(split.train, morph_opts), split.test);

  std::vector<SlangClass> train_labels;
  for (const auto& r : split.train) train_labels.push_back(r.label);
  auto sampler = slangclass::random_baseline(train_labels, writer.seed());
  std::vector<std::string> truth, guess;
  for (const auto& r : split.test) {
    truth.emplace_back(to_string(r.label));
    guess.emplace_back(to_string(sampler()));
  }
  const auto names = class_names();
  const auto baseline_report = stats::confusion_and_report(truth, guess, names);

  write_report_pair(writer, "char", inputs, char_report);
  write_report_pair(writer, "morph", inputs, morph_report);
  write_report_pair(writer, "baseline", inputs, baseline_report);
  writer.write("comparison.csv", inputs, [&](std::ostream& o) {
    o << "model,accuracy,weighted_f1\n";
    o << "char," << format_number(char_report.accuracy) << ',' << format_number(char_report.weighted_f1) << '\n';
    o << "morph," << format_number(morph_report.accuracy) << ',' << format_number(morph_report.weighted_f1) << '\n';
    o << "baseline," << format_number(baseline_report.accuracy) << ','
      << format_number(baseline_report.weighted_f1) << '\n';
  });

  const auto cross = slangclass::cross_class_validate(gold, slangclass::logreg_factory(char_opts), options.delta,
                                                      options.score, writer.seed(), options.test_fraction);
  writer.write("crossclass.csv", inputs, [&](std::ostream& o) {
    o << "held_out,weighted_f1\n";
    for (const auto& f : cross.folds) o << to_string(f.held_out) << ',' << format_number(f.weighted_f1) << '\n';
    o << "mean," << format_number(cross.mean_f1) << '\n';
  });

  // Evenly spaced thresholds from the lowest attainable score (where nothing
  // is rejected) to the highest (where everything is).
  double best_delta = options.delta, best_f1 = cross.mean_f1;
  if (options.sweep_steps > 0) {
    std::set<SlangClass> present;
    for (const auto& r : gold) present.insert(r.label);
    const auto known = static_cast<double>(present.size() - 1);
    const double lo = options.score == openset::Score::MaxProb ? 1.0 / known : -std::log(known);
    const double hi = options.score == openset::Score::MaxProb ? 1.0 : 0.0;
    std::vector<std::pair<double, slangclass::CrossClassResult>> sweep;
    for (std::size_t i = 0; i <= options.sweep_steps; ++i) {
      const double d = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(options.sweep_steps);
      sweep.emplace_back(d, slangclass::cross_class_validate(gold, slangclass::logreg_factory(char_opts), d,
                                                             options.score, writer.seed(), options.test_fraction));
      if (sweep.back().second.mean_f1 > best_f1) {
        best_f1 = sweep.back().second.mean_f1;
        best_delta = d;
      }
    }
    writer.write("openset_sweep.csv", inputs, [&](std::ostream& o) {
      o << "delta";
      for (const auto& f : cross.folds) o << ',' << to_string(f.held_out);
      o << ",mean\n";
      for (const auto& [d, r] : sweep) {
        o << format_number(d);
        for (const auto& f : r.folds) o << ',' << format_number(f.weighted_f1);
        o << ',' << format_number(r.mean_f1) << '\n';
      }
    });
  }

  // Rule-based pattern analyzers over the gold labels.
  std::map<std::string, std::size_t> clip_tally, redup_tally;
  writer.write("clippings.csv", inputs, [&](std::ostream& o) {
    o << "word,source,type\n";
    for (const auto& r : gold) {
      if (r.label != SlangClass::Clipping || r.components.size() != 1) continue;
      const auto t = std::string(slangclass::to_string(slangclass::classify_clipping(r.word, r.components[0])));
      ++clip_tally[t];
      o << csv_field(r.word) << ',' << csv_field(r.components[0]) << ',' << t << '\n';
    }
  });
  std::vector<std::pair<std::string, std::string>> exchanges;
  writer.write("reduplicatives.csv", inputs, [&](std::ostream& o) {
    o << "word,type\n";
    for (const auto& r : gold) {
      if (r.label != SlangClass::Reduplicative) continue;
      auto type = slangclass::ReduplicativeType::Unknown;
      try {
        type = slangclass::classify_reduplicative(r.word, options.y_is_vowel);
      } catch (const Error&) {
        // not a two-part pair; stays UNK
      }
      if (type == slangclass::ReduplicativeType::ExchangeVowel ||
          type == slangclass::ReduplicativeType::ExchangeConsonant) {
        exchanges.push_back(slangclass::split_reduplicative(r.word));
      }
      const auto t = std::string(slangclass::to_string(type));
      ++redup_tally[t];
      o << csv_field(r.word) << ',' << t << '\n';
    }
  });
  const auto subs = slangclass::substitution_stats(exchanges);
  writer.write("substitutions.csv", inputs, [&](std::ostream& o) {
    o << "from,to,probability,source_count\n";
    for (const auto& [from, row] : subs.replacements) {
      for (const auto& [to, p] : row) {
        o << from << ',' << to << ',' << format_number(p) << ',' << subs.source_counts.at(from) << '\n';
      }
    }
  });
  std::size_t blends_used = 0;
  if (std::any_of(gold.begin(), gold.end(), [](const auto& r) { return r.label == SlangClass::Blend; })) {
    const auto blend = slangclass::blend_suffix_stats(gold);
    blends_used = blend.used;
    writer.write("blend_suffixes.csv", inputs,
                 [&](std::ostream& o) { morphology::write_affix_csv(o, blend.distribution); });
  }

  Summary s("classes-eval");
  s.add("train", split.train.size())
      .add("test", split.test.size())
      .add("f1_char", char_report.weighted_f1)
      .add("f1_morph", morph_report.weighted_f1)
      .add("f1_baseline", baseline_report.weighted_f1)
      .add("crossclass_mean_f1", cross.mean_f1)
      .add("sweep_best_delta", best_delta)
      .add("sweep_best_f1", best_f1)
      .add("delta", options.delta)
      .add("score", std::string(openset::to_string(options.score)));
  for (const auto& [t, n] : clip_tally) s.add("clip_" + t, n);
  for (const auto& [t, n] : redup_tally) s.add("redup_" + t, n);
  s.add("blends_used", blends_used);
  return s;
}

Summary embed(const EmbedOptions& options, const ReportWriter& writer) {
  const auto entries = corpus::load_slang_jsonl(options.slang);
  const auto sentences = embeddings::build_usage_corpus(entries);
  const auto result = embeddings::train_skipgram(sentences, options.config);
  result.table.save(options.output);
  writer.write("embed_loss.csv", std::vector<fs::path>{options.slang}, [&](std::ostream& o) {
    o << "epoch,loss\n";
    for (std::size_t i = 0; i < result.epoch_loss.size(); ++i) {
      o << i + 1 << ',' << format_number(result.epoch_loss[i]) << '\n';
    }
  });
  std::size_t tokens = 0;
  for (const auto& s : sentences) tokens += s.size();
  Summary s("embed");
  s.add("sentences", sentences.size())
      .add("tokens", tokens)
      .add("vocabulary", result.table.size())
      .add("dimension", result.table.dimension());
  if (!result.epoch_loss.empty()) {
    s.add("first_loss", result.epoch_loss.front()).add("last_loss", result.epoch_loss.back());
  }
  return s;
}

Summary subjects(const SubjectOptions& options, const ReportWriter& writer) {
  const auto entries = corpus::load_slang_jsonl(options.slang);
  const auto table = embeddings::EmbeddingTable::load(options.embeddings);
  openset::validate_threshold(options.delta, options.score, kSubjects.size());
  const std::vector<fs::path> inputs{options.slang, options.embeddings};

  using Labelled = std::pair<std::string, SubjectLabel>;
  std::vector<Labelled> labelled;
  std::vector<std::string> unlabelled;
  for (const auto& e : entries) {
    if (e.subjects && !e.subjects->empty()) {
      labelled.emplace_back(e.headword, *e.subjects->begin());
    } else {
      unlabelled.push_back(e.headword);
    }
  }
  if (labelled.empty()) throw Error("no entry carries a subject label");
  auto [train, test] = stratified_split(labelled, options.test_fraction, writer.seed(),
                                        [](const Labelled& l) { return l.second; });
  const auto model = social::build_knn(table, train, options.k, options.metric);
  const auto eval = social::evaluate_subject_model(model, test, table);

  std::vector<SubjectLabel> train_labels;
  for (const auto& r : model.reference) train_labels.push_back(r.label);
  EmpiricalSampler<SubjectLabel> sampler(train_labels, writer.seed());
  std::vector<std::string> truth, guess;
  for (const auto& [word, label] : test) {
    if (!table.find_folded(embeddings::headword_token(word))) continue;
    truth.emplace_back(to_string(label));
    guess.emplace_back(to_string(sampler()));
  }
  const auto baseline = stats::confusion_and_report(truth, guess, subject_names());

  write_report_pair(writer, "subject_knn", inputs, eval.report);
  write_report_pair(writer, "subject_baseline", inputs, baseline);

  std::vector<std::string> known;
  for (const auto& w : unlabelled) {
    if (table.find_folded(embeddings::headword_token(w))) known.push_back(w);
  }
  auto proba = [&](const std::string& w) {
    const auto p = social::knn_predict_proba(model, table.vector(*table.find_folded(embeddings::headword_token(w))));
    return std::vector<double>(p.begin(), p.end());
  };
  const auto labels = openset::predict_with_reject<SubjectLabel, std::string>(
      std::span<const SubjectLabel>(kSubjects), proba, std::span<const std::string>(known), options.delta,
      options.score);
  std::size_t rejected = 0;
  writer.write("subject_predictions.csv", inputs, [&](std::ostream& o) {
    o << "word,label,score\n";
    for (std::size_t i = 0; i < known.size(); ++i) {
      rejected += labels[i].is_rejected();
      o << csv_field(known[i]) << ',' << to_string(labels[i]) << ','
        << format_number(openset::score(proba(known[i]), options.score)) << '\n';
    }
  });

  return Summary("subjects")
      .add("reference", model.reference.size())
      .add("test", test.size())
      .add("evaluated", eval.evaluated)
      .add("missing", eval.missing)
      .add("f1_knn", eval.report.weighted_f1)
      .add("f1_baseline", baseline.weighted_f1)
      .add("predicted", known.size())
      .add("rejected", rejected);
}

Summary bias_gender(const BiasOptions& options, const ReportWriter& writer) {
  const auto table = embeddings::EmbeddingTable::load(options.embeddings);
  const auto lex = social::BiasLexicons::load(options.lexicons);
  const auto g = social::gender_direction(table, lex.gender_pairs);
  const auto db = social::direct_bias(table, lex.occupations, g.unit);
  const auto proj = social::occupation_projections(table, lex.occupations, g.unit);
  const std::vector<fs::path> inputs{options.embeddings, options.lexicons / "gender_pairs.txt",
                                     options.lexicons / "occupations.txt"};
  writer.write("occupation_projections.csv", inputs, [&](std::ostream& o) {
    o << "rank,occupation,projection\n";
    for (std::size_t i = 0; i < proj.size(); ++i) {
      o << i + 1 << ',' << csv_field(proj[i].first) << ',' << format_number(proj[i].second) << '\n';
    }
  });
  Summary s("bias-gender");
  s.add("pairs_used", g.pairs_used)
      .add("pairs_missing", g.pairs_missing)
      .add("direct_bias", db.value)
      .add("occupations", db.evaluated)
      .add("missing", db.missing);
  if (!proj.empty()) s.add("most_female", proj.front().first).add("most_male", proj.back().first);
  return s;
}

Summary bias_sexprej(const BiasOptions& options, const ReportWriter& writer) {
  const auto table = embeddings::EmbeddingTable::load(options.embeddings);
  const auto lex = social::BiasLexicons::load(options.lexicons);
  const auto genders = social::GenderLexicon::load(options.lexicons / "names_gender.csv");
  const auto names = social::read_term_list(options.lexicons / "names.txt");
  const auto cmp = social::name_prejudice_comparison(table, names, genders, lex.prejudice_terms,
                                                     options.permutations, writer.seed());
  const std::vector<fs::path> inputs{options.embeddings, options.lexicons / "prejudice.txt",
                                     options.lexicons / "names.txt", options.lexicons / "names_gender.csv"};
  writer.write("sexprej_names.csv", inputs, [&](std::ostream& o) {
    o << "name,gender,sexprej\n";
    for (const auto& [name, score] : cmp.scores) {
      o << csv_field(name) << ',' << social::to_string(genders.lookup(name)) << ',' << format_number(score) << '\n';
    }
  });
  return Summary("bias-sexprej")
      .add("female_mean", cmp.female.mean)
      .add("female_n", cmp.female.n)
      .add("male_mean", cmp.male.mean)
      .add("male_n", cmp.male.n)
      .add("difference", cmp.test.observed_difference)
      .add("p_value", cmp.test.p_value)
      .add("exact", std::string(cmp.test.exact ? "true" : "false"))
      .add("unknown_gender", cmp.unknown_gender)
      .add("missing", cmp.missing);
}

Summary bias_religion(const BiasOptions& options, const ReportWriter& writer) {
  const auto table = embeddings::EmbeddingTable::load(options.embeddings);
  const auto lex = social::BiasLexicons::load(options.lexicons);
  const auto m = social::religious_prejudice_matrix(table, lex.religious_terms, lex.religious_prejudices);
  const std::vector<fs::path> inputs{options.embeddings, options.lexicons / "religions.txt",
                                     options.lexicons / "religious_prejudices.txt"};
  writer.write("religion_raw.csv", inputs, [&](std::ostream& o) { social::write_matrix_csv(o, m, false); });
  writer.write("religion_standardized.csv", inputs, [&](std::ostream& o) { social::write_matrix_csv(o, m, true); });
  return Summary("bias-religion")
      .add("religions", m.religions.size())
      .add("prejudices", m.prejudices.size())
      .add("overall_mean", m.overall_mean)
      .add("missing", m.missing.size());
}

std::vector<Summary> run_fixtures(const FixtureOptions& options, const std::string& tool_version) {
  const auto fixtures = options.data_dir / "fixtures";
  const auto lexicons = options.data_dir / "lexicons";
  const ReportWriter writer(options.out_dir, tool_version, options.seed);
  std::vector<Summary> out;

  const auto corpus_path = options.out_dir / "corpus.jsonl";
  out.push_back(ingest({fixtures / "slang.jsonl", corpus::LexiconFormat::SlangJsonl, options.min_votes, corpus_path}));

  out.push_back(phonology({corpus_path, fixtures / "standard.tsv", options.data_dir / "cmudict" / "cmudict.dict",
                           options.data_dir / "g2p_rules.tsv"},
                          writer));

  MorphologyOptions morph{corpus_path, {}, 25};
  morph.params.seed = options.seed;
  out.push_back(morphology(morph, writer));

  slangclass::TrainOptions train;
  train.hyper.seed = options.seed;
  train.segmenter.seed = options.seed;
  const auto model_path = options.out_dir / "classifier_char.slx";
  out.push_back(classes_train({fixtures / "gold.tsv", train, model_path}, writer));
  out.push_back(classes_predict({model_path, corpus_path, options.delta, options.score}, writer));
  out.push_back(classes_eval({fixtures / "gold.tsv", train, 0.10, options.delta, options.score}, writer));

  EmbedOptions emb{corpus_path, {}, options.out_dir / "embeddings.txt"};
  emb.config.dimension = options.dimension;
  emb.config.epochs = options.epochs;
  emb.config.min_count = options.min_count;
  emb.config.seed = options.seed;
  out.push_back(embed(emb, writer));

  out.push_back(subjects({corpus_path, emb.output, options.k, social::Metric::Cosine, 0.10, options.delta,
                          options.score},
                         writer));

  const BiasOptions bias{emb.output, lexicons};
  out.push_back(bias_gender(bias, writer));
  out.push_back(bias_sexprej(bias, writer));
  out.push_back(bias_religion(bias, writer));

  writer.write("summary.txt", std::vector<fs::path>{fixtures / "slang.jsonl", fixtures / "gold.tsv"},
               [&](std::ostream& o) {
                 for (const auto& s : out) o << s.line() << '\n';
               });
  return out;
}

}  // namespace slanglex::pipeline
