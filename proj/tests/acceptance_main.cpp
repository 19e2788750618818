// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors

#include <cstdio>
int main() { std::puts("placeholder"); return 1; }
