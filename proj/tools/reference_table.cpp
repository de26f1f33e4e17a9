#include "reference_table.hpp"

namespace permsq::cli {

const std::map<int, std::string>& reference_alpha() {
  static const std::map<int, std::string> table = {
      {2, "1"},
      {3, "3"},
      {4, "12"},
      {5, "60"},
      {6, "270"},
      {7, "1890"},
      {8, "14280"},
      {9, "128520"},
      {10, "1096200"},
      {11, "12058200"},
      {12, "139043520"},
      {13, "1807565760"},
      {14, "22642139520"},
      {15, "339632092800"},
      {16, "5237183952000"},
      {17, "89032127184000"},
  };
  return table;
}

}  // namespace permsq::cli
