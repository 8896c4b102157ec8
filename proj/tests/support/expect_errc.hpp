#pragma once

#include <gtest/gtest.h>

#include "msi/error.hpp"

// Runs `stmt` and checks it throws msi::Error carrying `errc`.
#define EXPECT_ERRC(stmt, errc)                                                     \
  do {                                                                              \
    bool msi_thrown_ = false;                                                       \
    try {                                                                           \
      stmt;                                                                         \
    } catch (const ::msi::Error& e) {                                               \
      msi_thrown_ = true;                                                           \
      EXPECT_EQ(e.code(), errc) << e.what();                                        \
    }                                                                               \
    EXPECT_TRUE(msi_thrown_) << #stmt " did not throw";                             \
  } while (false)
