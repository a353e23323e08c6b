#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "mfas/types.hpp"

namespace mfas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoopEdge : public Error {
 public:
  explicit LoopEdge(Vertex v);
  Vertex vertex;
};

class DuplicateEdge : public Error {
 public:
  explicit DuplicateEdge(Edge e);
  Edge edge;
};

class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(Vertex v, std::size_t n);
  Vertex vertex;
};

class OverlappingSets : public Error {
 public:
  explicit OverlappingSets(Vertex shared);
  Vertex vertex;
};

class KOutOfRange : public Error {
 public:
  KOutOfRange(int k, int m);
};

class UnsupportedM : public Error {
 public:
  explicit UnsupportedM(int m);
};

/// The input has a directed cycle of length <= m.
class NotMFree : public Error {
 public:
  NotMFree(int m, CycleWitness w);
  int m;
  CycleWitness witness;
};

class NoAdmissibleRatio : public Error {
 public:
  using Error::Error;
};

class NoAdmissibleCandidate : public Error {
 public:
  using Error::Error;
};

/// A split step broke one of its certificate inequalities. Unreachable on valid input.
class InternalBoundViolation : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t n, std::size_t limit);
  std::size_t n;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class BadStep : public BadParameter {
 public:
  using BadParameter::BadParameter;
};

class BadSizes : public BadParameter {
 public:
  using BadParameter::BadParameter;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line;
};

}  // namespace mfas
