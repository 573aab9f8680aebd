/* Copyright 2026 The isowein Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

namespace isowein {

struct Point2 {
  double x = 0;
  double y = 0;

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  double x = 0;
  double y = 0;
  double z = 0;

  friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

}  // namespace isowein
