// Copyright 2026 The dso_tree Authors.
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

#ifndef DSO_TREE_ERRORS_HPP_
#define DSO_TREE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dso_tree {

// Coarse error families. The CLI maps each to a distinct exit code.
enum class ErrorClass {
  kParse,
  kValidation,
  kInfeasible,
  kCheckFailed,
};

class Error : public std::runtime_error {
 public:
  Error(std::string kind, ErrorClass error_class, const std::string& message)
      : std::runtime_error(message),
        kind_(std::move(kind)),
        error_class_(error_class) {}

  // Name of the concrete error, e.g. "CapacityError".
  const std::string& kind() const { return kind_; }
  ErrorClass error_class() const { return error_class_; }

 private:
  std::string kind_;
  ErrorClass error_class_;
};

#define DSO_TREE_DEFINE_ERROR(Name, Class)              \
  class Name : public Error {                           \
   public:                                              \
    explicit Name(const std::string& message)           \
        : Error(#Name, ErrorClass::Class, message) {}   \
  }

DSO_TREE_DEFINE_ERROR(ParseError, kParse);

DSO_TREE_DEFINE_ERROR(CycleError, kValidation);
DSO_TREE_DEFINE_ERROR(CapacityError, kValidation);
DSO_TREE_DEFINE_ERROR(ValueError, kValidation);
DSO_TREE_DEFINE_ERROR(IndexError, kValidation);
DSO_TREE_DEFINE_ERROR(DemandError, kValidation);
DSO_TREE_DEFINE_ERROR(DomainError, kValidation);
DSO_TREE_DEFINE_ERROR(TooLargeError, kValidation);

DSO_TREE_DEFINE_ERROR(InfeasibleError, kInfeasible);
DSO_TREE_DEFINE_ERROR(InfeasibleInputError, kInfeasible);
DSO_TREE_DEFINE_ERROR(HorizonError, kInfeasible);
DSO_TREE_DEFINE_ERROR(SamplingError, kInfeasible);

DSO_TREE_DEFINE_ERROR(NonMonotoneError, kCheckFailed);
DSO_TREE_DEFINE_ERROR(TransformError, kCheckFailed);

#undef DSO_TREE_DEFINE_ERROR

}  // namespace dso_tree

#endif  // DSO_TREE_ERRORS_HPP_
