#pragma once

#include <array>
#include <string>
#include <vector>

#include "qact/mat.hpp"

namespace qact {

enum class GenSymbol { c11 = 0, c12 = 1, c21 = 2, c22 = 3 };

const char* gen_name(GenSymbol g);

// Formal linear combination of words in the generators; the represented
// relation holds when the combination evaluates to the zero matrix.
struct RelTerm {
    AstPtr coeff;                  // expression in q only
    std::vector<GenSymbol> word;   // nonempty
};

struct Relation {
    std::string name;
    std::vector<RelTerm> terms;
};

// Images of the four generators under one representation.
struct Assignment {
    std::array<Mat, 4> m{Mat(4), Mat(4), Mat(4), Mat(4)};
    const Mat& operator[](GenSymbol g) const { return m[static_cast<std::size_t>(g)]; }
    Mat& operator[](GenSymbol g) { return m[static_cast<std::size_t>(g)]; }
};

struct RelationStatus {
    std::string name;
    Mat residual;
    bool is_zero;
};

// Relation file format: one relation per line, `NAME: expr`, where expr is a
// +/- combination of products of generator symbols and scalar factors in q.
// Lines starting with '#' and blank lines are skipped.
std::vector<Relation> parse_relations(const std::string& text);
std::vector<Relation> load_relations(const std::string& path);

Mat eval_relation(const Relation& rel, const Assignment& asg, const ParamEnv& env = {});

std::vector<RelationStatus> check_all(const std::vector<Relation>& rels, const Assignment& asg,
                                      const ParamEnv& env = {});

// Same relation set with q replaced by 1/q in every coefficient.
std::vector<Relation> flip_q_convention(const std::vector<Relation>& rels);

}  // namespace qact
