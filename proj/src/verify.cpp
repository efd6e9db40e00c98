#include "mdtree/verify.hpp"

#include <set>
#include <sstream>

#include "mdtree/bijections.hpp"
#include "mdtree/enumerate.hpp"
#include "mdtree/error.hpp"
#include "mdtree/prufer.hpp"
#include "mdtree/text.hpp"

namespace mdtree {

namespace {

struct Partial {
  std::vector<std::uint64_t> trees;
  std::vector<std::uint64_t> roundtrips;
  std::vector<std::vector<std::uint64_t>> images;  // word index per k
  std::vector<std::string> failures;
};

std::uint64_t word_index(std::span<const Label> word, unsigned n) {
  std::uint64_t index = 0;
  for (Label x : word) index = index * n + (x - 1);
  return index;
}

std::vector<Label> word_at(std::uint64_t index, unsigned n) {
  std::vector<Label> word(n);
  for (unsigned i = n; i > 0; --i) {
    word[i - 1] = static_cast<Label>(index % n + 1);
    index /= n;
  }
  return word;
}

std::string fail_line(unsigned n, unsigned k, const std::string& object, const std::string& reason) {
  std::ostringstream os;
  os << "FAIL n=" << n << " k=" << k << " object=" << (object.empty() ? "-" : object) << " reason=" << reason;
  return os.str();
}

void sweep_slice(unsigned n, std::span<const Label> labels, std::span<const Label> prefix, Partial& out) {
  out.trees.assign(n + 1, 0);
  out.roundtrips.assign(n + 1, 0);
  out.images.assign(n + 1, {});
  for_each_rooted_tree(labels, prefix, [&](const RootedTree& t) {
    const TnkTree source = TnkTree::classify(t);
    const unsigned k = source.k();
    ++out.trees[k];
    try {
      const FnkTree image = compose_t_to_f(source);
      if (image.n() != n || image.k() != k) {
        out.failures.push_back(fail_line(n, k, to_string(t), "image has the wrong parameters"));
        return;
      }
      const std::vector<Label> word = word_of_fnk_tree(image.tree(), n, k);
      out.images[k].push_back(word_index(word, n));
      if (compose_f_to_t(image) == source) {
        ++out.roundtrips[k];
      } else {
        out.failures.push_back(fail_line(n, k, to_string(t), "roundtrip mismatch"));
      }
    } catch (const std::exception& e) {
      out.failures.push_back(fail_line(n, k, to_string(t), e.what()));
    }
  });
}

// Counts members of A, B and C for (n,k); every member is validated and
// checked for duplicates by its serialization.
struct FiveWay {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
};

FiveWay count_small_sets(unsigned n, unsigned k, std::vector<std::string>& failures) {
  FiveWay out;
  std::set<std::string> seen;
  auto record = [&](const std::string& text, const char* set_name, auto&& validate) {
    try {
      validate();
    } catch (const std::exception& e) {
      failures.push_back(fail_line(n, k, text, std::string(set_name) + " member invalid: " + e.what()));
    }
    if (!seen.insert(text).second) failures.push_back(fail_line(n, k, text, std::string(set_name) + " duplicate"));
  };

  for_each_ank_cycle(n, k, [&](const TreeCycle& c) {
    ++out.a;
    record(to_string(c), "cycle", [&] { AnkCycle(c, n, k); });
  });
  seen.clear();
  for_each_bnk_forest(n, k, [&](const OrderedForest& f) {
    ++out.b;
    record(to_string(f), "forest", [&] { BnkForest(f, n, k); });
  });
  seen.clear();
  for_each_k_good_sequence(iota_labels(n), k, [&](const std::vector<OrderedForest>& s) {
    ++out.c;
    record(to_string(std::span<const OrderedForest>(s)), "sequence", [&] { CnkSequence(s, n, k); });
  });
  return out;
}

}  // namespace

std::string VerifyReport::text() const {
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string VerifyReport::csv() const {
  std::string out = to_csv(trees);
  for (const CountTable* t : {&image, &words}) {
    const std::string body = to_csv(*t);
    out += body.substr(body.find('\n') + 1);
  }
  return out;
}

VerifyReport verify_sweep(unsigned n_max, unsigned jobs) {
  if (n_max > kMaxSweepN)
    throw ValidationError("max-n=" + std::to_string(n_max) + " exceeds the sweep bound " +
                          std::to_string(kMaxSweepN));
  VerifyReport report;
  report.trees = {n_max, CountRoute::trees, {}};
  report.image = {n_max, CountRoute::bijection_image, {}};
  report.words = {n_max, CountRoute::words, {}};

  for (unsigned n = 0; n <= n_max; ++n) {
    const std::vector<Label> labels = iota_labels(n + 1);
    const std::vector<std::vector<Label>> prefixes = word_prefixes(labels);
    std::vector<Partial> partials(prefixes.size());
    run_partitioned(prefixes.size(), jobs, [&](std::size_t i) { sweep_slice(n, labels, prefixes[i], partials[i]); });

    std::uint64_t space = 1;
    for (unsigned i = 0; i < n; ++i) space *= n;
    std::vector<std::uint64_t> trees(n + 1, 0), roundtrips(n + 1, 0), image(n + 1, 0);
    std::vector<std::vector<bool>> hit(n + 1);
    std::vector<std::string> failures;
    for (const Partial& p : partials) {
      for (unsigned k = 0; k <= n; ++k) {
        trees[k] += p.trees[k];
        roundtrips[k] += p.roundtrips[k];
        if (hit[k].empty()) hit[k].assign(space, false);
        for (std::uint64_t w : p.images[k]) {
          if (hit[k][w]) {
            failures.push_back(fail_line(n, k, to_string(fnk_tree_of_word(word_at(w, n), n, k)), "image collision"));
          } else {
            hit[k][w] = true;
            ++image[k];
          }
        }
      }
      failures.insert(failures.end(), p.failures.begin(), p.failures.end());
    }
    const std::vector<std::uint64_t> words = count_fnk_row(n);

    for (unsigned k = 0; k <= n; ++k) {
      std::vector<std::string> cell_failures;
      for (const std::string& f : failures)
        if (f.rfind("FAIL n=" + std::to_string(n) + " k=" + std::to_string(k) + " ", 0) == 0) cell_failures.push_back(f);

      std::ostringstream summary;
      summary << "n=" << n << " k=" << k << " T=" << trees[k] << " image=" << image[k] << " F=" << words[k]
              << " roundtrip=" << roundtrips[k];
      bool counts_agree = trees[k] == image[k] && image[k] == words[k] && roundtrips[k] == trees[k];
      if (BigInt(words[k]) != fnk_inclusion_exclusion(n, k)) {
        counts_agree = false;
        cell_failures.push_back(fail_line(n, k, "", "word count disagrees with inclusion-exclusion"));
      }
      if (n <= kFiveWayMaxN) {
        const FiveWay small = count_small_sets(n, k, cell_failures);
        summary << " A=" << small.a << " B=" << small.b << " C=" << small.c;
        counts_agree = counts_agree && small.a == trees[k] && small.b == trees[k] && small.c == trees[k];
      }
      if (!counts_agree) cell_failures.push_back(fail_line(n, k, "", "cardinalities differ: " + summary.str()));

      if (cell_failures.empty()) {
        report.lines.push_back("OK " + summary.str());
      } else {
        report.lines.insert(report.lines.end(), cell_failures.begin(), cell_failures.end());
        report.failures += cell_failures.size();
      }
    }
    report.trees.rows.push_back(trees);
    report.image.rows.push_back(image);
    report.words.rows.push_back(words);
  }
  report.lines.push_back("DONE max-n=" + std::to_string(n_max) + " failures=" + std::to_string(report.failures));
  return report;
}

}  // namespace mdtree
