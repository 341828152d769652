#pragma once

namespace kellipse {

inline long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

}  // namespace kellipse
