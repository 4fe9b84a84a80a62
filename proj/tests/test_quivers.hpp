#ifndef QCC_TEST_QUIVERS_HPP
#define QCC_TEST_QUIVERS_HPP

#include "qcc/quiver.hpp"

// Standard quivers used across the test suites (0-based arrows).

inline qcc::Quiver kronecker() { return qcc::Quiver::from_arrows(2, {{0, 1}, {0, 1}}); }

inline qcc::Quiver kronecker3() { return qcc::Quiver::from_arrows(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline qcc::Quiver a2() { return qcc::Quiver::from_arrows(2, {{0, 1}}); }

inline qcc::Quiver a3() { return qcc::Quiver::from_arrows(3, {{0, 1}, {1, 2}}); }

// acyclic triangle, source 1, sink 3
inline qcc::Quiver a2_tilde() { return qcc::Quiver::from_arrows(3, {{0, 1}, {0, 2}, {1, 2}}); }

// 4-cycle oriented 1->2->3->4 with shortcut 1->4; one exceptional tube of rank 3
inline qcc::Quiver a3_tilde() {
    return qcc::Quiver::from_arrows(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// star with central vertex 1, arrows from each leaf into the center
inline qcc::Quiver d4_tilde() {
    return qcc::Quiver::from_arrows(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}});
}

// double arrow 1=>2, 2->3, 3->4, double arrow 4=>5
inline qcc::Quiver chain5() {
    return qcc::Quiver::from_arrows(5, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 4}});
}

#endif
