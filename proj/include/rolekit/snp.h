//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_SNP_H_
#define ROLEKIT_SNP_H_

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "rolekit/checked_int.h"
#include "rolekit/graph.h"

namespace rolekit {

template <class Scalar = WalkCount>
using WalkCountMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using AdjacencyMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

/**
 * @brief Walk counts from v: row k holds the number of walks of length k from
 *        v to every node, for k = 0..depth.
 *
 * Row 0 is the indicator of v and row k+1 = row k * A, so the result equals
 * rows v of A^0..A^depth without forming matrix powers. With the default
 * scalar every addition is overflow-checked and throws OverflowError.
 */
template <class Scalar = WalkCount>
WalkCountMatrix<Scalar> walk_count_rows(const AdjacencyMatrix<Scalar> &adjacency, NodeId v,
                                        int depth) {
  if (v < 0 || v >= adjacency.rows())
    throw std::out_of_range("node index " + std::to_string(v) + " out of range");
  if (depth < 0)
    throw std::invalid_argument("negative depth");

  WalkCountMatrix<Scalar> rows = WalkCountMatrix<Scalar>::Zero(depth + 1, adjacency.cols());
  rows(0, v) = Scalar(1);
  for (int k = 0; k < depth; ++k)
    rows.row(k + 1) = rows.row(k) * adjacency;
  return rows;
}

template <class Scalar = WalkCount>
WalkCountMatrix<Scalar> walk_count_rows(const Graph &g, NodeId v, int depth) {
  return walk_count_rows<Scalar>(adjacency_matrix<Scalar>(g), v, depth);
}

/**
 * @brief Sorted neighbourhood propagation embedding of one node.
 *
 * The columns of the walk-count matrix with all-zero columns removed, sorted
 * lexicographically (ascending). Targets out of reach within `depth` steps
 * contribute nothing, so embeddings from graphs of different sizes compare
 * directly.
 */
template <class Scalar = WalkCount>
class BasicSnpEmbedding {
public:
  using Matrix = WalkCountMatrix<Scalar>;

  BasicSnpEmbedding() = default;

  static BasicSnpEmbedding from_walk_counts(const Matrix &rows) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index u = 0; u < rows.cols(); ++u)
      if ((rows.col(u).array() != Scalar(0)).any())
        keep.push_back(u);

    std::sort(keep.begin(), keep.end(), [&](Eigen::Index a, Eigen::Index b) {
      for (Eigen::Index k = 0; k < rows.rows(); ++k)
        if (rows(k, a) != rows(k, b))
          return rows(k, a) < rows(k, b);
      return a < b;
    });

    BasicSnpEmbedding e;
    e.columns_.resize(rows.rows(), static_cast<Eigen::Index>(keep.size()));
    for (Eigen::Index j = 0; j < e.columns_.cols(); ++j)
      e.columns_.col(j) = rows.col(keep[j]);
    return e;
  }

  int depth() const { return static_cast<int>(columns_.rows()) - 1; }
  Eigen::Index num_columns() const { return columns_.cols(); }

  // (depth + 1) x num_columns(); column j is the walk-count profile of one
  // target node.
  const Matrix &columns() const { return columns_; }

  // Decimal entries, ',' between entries of a column, ';' between columns.
  std::string serialize() const {
    std::string out;
    for (Eigen::Index j = 0; j < columns_.cols(); ++j) {
      if (j > 0)
        out += ';';
      for (Eigen::Index k = 0; k < columns_.rows(); ++k) {
        if (k > 0)
          out += ',';
        using rolekit::to_string;
        using std::to_string;
        out += to_string(columns_(k, j));
      }
    }
    return out;
  }

  friend bool operator==(const BasicSnpEmbedding &a, const BasicSnpEmbedding &b) {
    return a.columns_.rows() == b.columns_.rows() && a.columns_.cols() == b.columns_.cols()
           && a.columns_ == b.columns_;
  }

private:
  Matrix columns_;
};

using SnpEmbedding = BasicSnpEmbedding<WalkCount>;

template <class Scalar = WalkCount>
BasicSnpEmbedding<Scalar> snp_embedding(const Graph &g, NodeId v, int depth) {
  return BasicSnpEmbedding<Scalar>::from_walk_counts(walk_count_rows<Scalar>(g, v, depth));
}

// Embeddings of every node of g.
std::vector<SnpEmbedding> snp_embeddings(const Graph &g, int depth, int jobs = 1);

/**
 * @brief Depth-d SNP roles over a whole collection.
 *
 * Nodes (in global order) share a role iff their embeddings are equal; role
 * ids are canonical. Embeddings are computed per graph, possibly in parallel,
 * and keyed by their serialized form.
 */
Coloring snp_roles(const GraphCollection &collection, int depth, int jobs = 1);
Coloring snp_roles(const Graph &g, int depth, int jobs = 1);

// One line per node: `graph_id,node_id,<serialized embedding>`, ids 1-based.
void write_embedding_dump(std::ostream &out, const GraphCollection &collection, int depth,
                          int jobs = 1);

}  // namespace rolekit

#endif  // ROLEKIT_SNP_H_
