// Copyright 2026 The shmetric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shmetric/element_set.hpp"
#include "shmetric/polymatroid.hpp"
#include "shmetric/rng.hpp"

namespace shm::apps {

// Documents as feature sets B_i over a universe of n features.
struct Corpus {
  std::size_t n = 0;
  std::vector<ElementSet> docs;
  std::optional<std::vector<std::size_t>> labels;
  std::optional<std::vector<std::vector<std::size_t>>> word_classes;

  std::size_t size() const { return docs.size(); }

  void Validate() const {
    for (const auto& d : docs) {
      if (d.n() != n) throw std::invalid_argument("document on the wrong feature universe");
    }
    if (labels && labels->size() != docs.size()) throw std::invalid_argument("one label per document required");
    if (word_classes) (void)PolymatroidSpec::ClusteredConcave(n, *word_classes);  // checks the partition
  }

  // f(Y) = sum_W sqrt(|Y n W|) over the corpus word classes.
  PolymatroidSpec ClusteredSqrt() const {
    if (!word_classes) throw std::invalid_argument("corpus has no word classes");
    return PolymatroidSpec::ClusteredConcave(n, *word_classes);
  }
};

inline PolymatroidSpec Hamming(std::size_t n) { return PolymatroidSpec::Modular(std::vector<double>(n, 1.0)); }

struct SynthCorpusParams {
  enum class Overlap { kDisjoint, kSampled };

  std::size_t num_docs = 100;
  std::size_t num_clusters = 10;
  std::size_t n = 1000;
  std::size_t num_word_classes = 100;
  std::size_t words_per_doc = 10;
  Overlap overlap = Overlap::kDisjoint;
};

// Synthetic corpus: the features are split into equal word classes, each
// true cluster owns num_word_classes / num_clusters of them, and every
// document draws its words from its cluster's classes. Disjoint mode takes
// one distinct word per class per document, so no word is shared; sampled
// mode draws words_per_doc words uniformly without replacement from the
// cluster's words. Feature ids and document order are shuffled.
inline Corpus SynthCorpus(const SynthCorpusParams& p, std::uint64_t seed) {
  if (p.num_clusters == 0 || p.num_word_classes == 0 || p.num_docs == 0) {
    throw std::invalid_argument("synthetic corpus needs positive sizes");
  }
  if (p.num_word_classes % p.num_clusters != 0) {
    throw std::invalid_argument("word classes must divide evenly across clusters");
  }
  if (p.n % p.num_word_classes != 0) throw std::invalid_argument("features must divide evenly into word classes");
  if (p.num_docs % p.num_clusters != 0) throw std::invalid_argument("documents must divide evenly across clusters");
  const std::size_t classes_per_cluster = p.num_word_classes / p.num_clusters;
  const std::size_t class_size = p.n / p.num_word_classes;
  const std::size_t docs_per_cluster = p.num_docs / p.num_clusters;
  if (p.overlap == SynthCorpusParams::Overlap::kDisjoint) {
    if (p.words_per_doc != classes_per_cluster) {
      throw std::invalid_argument("disjoint mode takes exactly one word per class of the cluster");
    }
    if (docs_per_cluster > class_size) throw std::invalid_argument("not enough words per class for disjoint documents");
  } else if (p.words_per_doc > classes_per_cluster * class_size) {
    throw std::invalid_argument("words_per_doc exceeds the cluster vocabulary");
  }

  Rng rng = MakeRng(seed);
  std::vector<std::size_t> word_ids(p.n);
  std::iota(word_ids.begin(), word_ids.end(), 0);
  std::shuffle(word_ids.begin(), word_ids.end(), rng);
  std::vector<std::vector<std::size_t>> classes(p.num_word_classes);
  for (std::size_t c = 0; c < p.num_word_classes; ++c) {
    classes[c].assign(word_ids.begin() + static_cast<std::ptrdiff_t>(c * class_size),
                      word_ids.begin() + static_cast<std::ptrdiff_t>((c + 1) * class_size));
    std::sort(classes[c].begin(), classes[c].end());
  }

  std::vector<ElementSet> docs;
  std::vector<std::size_t> labels;
  for (std::size_t cl = 0; cl < p.num_clusters; ++cl) {
    std::vector<ElementSet> cluster_docs(docs_per_cluster, ElementSet(p.n));
    if (p.overlap == SynthCorpusParams::Overlap::kDisjoint) {
      for (std::size_t w = 0; w < classes_per_cluster; ++w) {
        std::vector<std::size_t> words = classes[cl * classes_per_cluster + w];
        std::shuffle(words.begin(), words.end(), rng);
        for (std::size_t d = 0; d < docs_per_cluster; ++d) cluster_docs[d].insert(words[d]);
      }
    } else {
      std::vector<std::size_t> vocab;
      for (std::size_t w = 0; w < classes_per_cluster; ++w) {
        const auto& cls = classes[cl * classes_per_cluster + w];
        vocab.insert(vocab.end(), cls.begin(), cls.end());
      }
      for (auto& doc : cluster_docs) {
        std::shuffle(vocab.begin(), vocab.end(), rng);
        for (std::size_t t = 0; t < p.words_per_doc; ++t) doc.insert(vocab[t]);
      }
    }
    for (auto& d : cluster_docs) {
      docs.push_back(std::move(d));
      labels.push_back(cl);
    }
  }
  std::vector<std::size_t> perm(docs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  Corpus c;
  c.n = p.n;
  c.labels.emplace();
  for (std::size_t i : perm) {
    c.docs.push_back(docs[i]);
    c.labels->push_back(labels[i]);
  }
  c.word_classes = std::move(classes);
  return c;
}

}  // namespace shm::apps
