#pragma once

// The operations drawn in the figures, transcribed by hand.

#include <string>

#include "qtsg/magma.hpp"
#include "qtsg/order.hpp"

namespace fixtures {

inline qtsg::FiniteBinOp fig3() {
  return qtsg::FiniteBinOp(3, {1, 2, 2, 2, 2, 2, 2, 2, 3});
}

// max for 4 < 3 < 5 < 2 < 1 < 6
inline qtsg::TotalOrder fig4_order() {
  const int seq[] = {4, 3, 5, 2, 1, 6};
  return qtsg::TotalOrder::from_sequence(seq);
}
inline qtsg::FiniteBinOp fig4() { return qtsg::maximum(fig4_order()); }

// max for 4 < 5 < 3 < 2 < 6 < 1
inline qtsg::FiniteBinOp fig2() {
  const int seq[] = {4, 5, 3, 2, 6, 1};
  return qtsg::maximum(qtsg::TotalOrder::from_sequence(seq));
}

inline qtsg::FiniteBinOp fig5() {
  return qtsg::FiniteBinOp(4, {1, 1, 3, 4,  //
                               1, 2, 3, 4,  //
                               1, 3, 3, 4,  //
                               1, 4, 3, 4});
}

inline qtsg::FiniteBinOp fig8() {
  return qtsg::FiniteBinOp(4, {1, 1, 1, 4,  //
                               1, 2, 3, 4,  //
                               3, 3, 3, 4,  //
                               4, 4, 4, 4});
}

inline qtsg::FiniteBinOp fig9() {
  return qtsg::FiniteBinOp(4, {1, 2, 3, 4,  //
                               2, 2, 2, 2,  //
                               3, 3, 3, 3,  //
                               4, 2, 3, 4});
}

inline qtsg::WeakOrder fig8_order() { return qtsg::WeakOrder::from_ranks({2, 1, 2, 3}); }
inline qtsg::WeakOrder fig9_order() { return qtsg::WeakOrder::from_ranks({1, 3, 3, 2}); }

inline std::string data_dir() { return QTSG_TEST_DATA_DIR; }
inline std::string golden_dir() { return QTSG_TEST_GOLDEN_DIR; }

}  // namespace fixtures
