#include <string>

namespace weylcryst::invariants::detail {

// Shipped catalog: every lattice-table row of rank <= 6 with generator
// translations for each representative class. Header carries an FNV-1a
// checksum of the payload; the loader re-verifies it.
extern const char* const kCatalogText;
const char* const kCatalogText = R"cat(weylcryst-catalog v1 checksum d4b18029a21a6445
family A 4 Lambda/1 classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
end
family A 4 Lambda/5 classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
end
family A 5 Lambda/1 classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
end
family A 5 Lambda/2 classes 2 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
rep
1/6 1/6 1/6 1/6 1/6 -5/6
1/6 1/6 1/6 1/6 1/6 -5/6
1/6 1/6 1/6 1/6 1/6 -5/6
1/6 1/6 1/6 1/6 1/6 -5/6
1/6 1/6 1/6 1/6 1/6 -5/6
end
family A 5 Lambda/3 classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
end
family A 5 Lambda/6 classes 2 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
rep
0/1 0/1 1/2 1/2 1/2 -3/2
1/2 0/1 0/1 1/2 1/2 -3/2
1/2 1/2 0/1 0/1 1/2 -3/2
1/2 1/2 1/2 0/1 0/1 -3/2
1/2 1/2 1/2 1/2 0/1 -2/1
end
family B 3 CL classes 4 label involution-pattern
rep
0/1 0/1 0/1
0/1 0/1 0/1
0/1 0/1 0/1
rep
0/1 0/1 0/1
0/1 0/1 0/1
1/2 1/2 1/2
rep
1/2 1/2 1/2
1/2 1/2 1/2
0/1 0/1 0/1
rep
1/2 1/2 1/2
1/2 1/2 1/2
1/2 1/2 1/2
end
family B 4 CL classes 4 label involution-pattern
rep
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
rep
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
1/2 1/2 1/2 1/2
rep
1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2
0/1 0/1 0/1 0/1
rep
1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2
end
family B 5 CL classes 4 label involution-pattern
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
1/2 1/2 1/2 1/2 1/2
rep
1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2
0/1 0/1 0/1 0/1 0/1
rep
1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2
end
family B 6 CL classes 4 label involution-pattern
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
1/2 1/2 1/2 1/2 1/2 1/2
rep
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
0/1 0/1 0/1 0/1 0/1 0/1
rep
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
end
family B 3 CCL classes 2 label split-only
rep
0/1 0/1 0/1
0/1 0/1 0/1
0/1 0/1 0/1
rep
1/4 1/4 1/4
1/4 1/4 1/4
0/1 1/2 0/1
end
family B 4 CCL classes 2 label split-only
rep
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
rep
0/1 0/1 1/2 0/1
1/2 0/1 0/1 0/1
0/1 1/2 0/1 0/1
0/1 0/1 0/1 0/1
end
family B 5 CCL classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
end
family B 6 CCL classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
end
family C 3 FL classes 4 label short-coset-squares
rep
0/1 0/1 0/1
0/1 0/1 0/1
0/1 0/1 0/1
rep
0/1 0/1 0/1
0/1 0/1 0/1
1/2 1/2 1/2
rep
1/1 0/1 0/1
1/1 0/1 0/1
1/1 0/1 0/1
rep
1/1 0/1 0/1
1/1 0/1 0/1
3/2 1/2 1/2
end
family C 4 FL classes 2 label split-only
rep
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
rep
0/1 0/1 0/1 1/1
0/1 0/1 0/1 1/1
0/1 0/1 1/2 1/2
0/1 0/1 0/1 0/1
end
family C 5 FL classes 4 label short-coset-squares
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
1/2 1/2 1/2 1/2 1/2
rep
1/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1
rep
1/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1
3/2 1/2 1/2 1/2 1/2
end
family C 6 FL classes 2 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
rep
0/1 0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 1/2 1/2
0/1 0/1 0/1 0/1 0/1 0/1
end
family D 3 FL classes 2 label split-only
rep
0/1 0/1 0/1
0/1 0/1 0/1
0/1 0/1 0/1
rep
0/1 0/1 1/1
0/1 1/2 1/2
0/1 0/1 1/1
end
family D 3 CL classes 2 label split-only
rep
0/1 0/1 0/1
0/1 0/1 0/1
0/1 0/1 0/1
rep
0/1 0/1 1/2
1/2 0/1 0/1
1/2 0/1 0/1
end
family D 3 CCL classes 2 label split-only
rep
0/1 0/1 0/1
0/1 0/1 0/1
0/1 0/1 0/1
rep
1/4 1/4 1/4
1/4 1/4 1/4
1/4 3/4 1/4
end
family D 4 FL classes 2 label split-only
rep
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
rep
0/1 0/1 0/1 1/1
0/1 0/1 0/1 1/1
0/1 0/1 1/2 1/2
0/1 0/1 0/1 1/1
end
family D 4 CL classes 2 label split-only
rep
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
rep
0/1 0/1 1/2 1/2
1/2 0/1 0/1 1/2
1/2 1/2 0/1 0/1
1/2 1/2 0/1 0/1
end
family D 4 CCL classes 2 label split-only
rep
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
rep
1/4 1/4 1/4 1/4
1/4 1/4 1/4 1/4
1/4 1/4 1/4 1/4
1/4 3/4 3/4 1/4
end
family D 5 FL classes 2 label split-only
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
rep
0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 1/2 1/2
0/1 0/1 0/1 0/1 1/1
end
family D 5 CL classes 2 label split-only
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
rep
0/1 0/1 1/2 1/2 1/2
1/2 0/1 0/1 1/2 1/2
1/2 1/2 0/1 0/1 1/2
1/2 1/2 1/2 0/1 0/1
1/2 1/2 1/2 0/1 0/1
end
family D 5 CCL classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1
end
family D 6 FL classes 3 label fork-squares
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
rep
1/1 0/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1 0/1
1/1 0/1 0/1 0/1 0/1 0/1
rep
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
1/2 1/2 1/2 1/2 1/2 1/2
end
family D 6 CL classes 2 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
rep
0/1 0/1 1/2 1/2 1/2 1/2
1/2 0/1 0/1 1/2 1/2 1/2
1/2 1/2 0/1 0/1 1/2 1/2
1/2 1/2 1/2 0/1 0/1 1/2
1/2 1/2 1/2 1/2 0/1 0/1
1/2 1/2 1/2 1/2 0/1 0/1
end
family D 6 Omega classes 2 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
rep
0/1 0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 0/1 1/1
0/1 0/1 0/1 0/1 1/2 1/2
0/1 0/1 0/1 0/1 0/1 1/1
end
family D 6 CCL classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1
end
family E6 6 Q6 classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
end
family E6 6 P6 classes 1 label split-only
rep
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1 0/1 0/1 0/1 0/1
end
family F4 4 CCL classes 1 label split-only
rep
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
0/1 0/1 0/1 0/1
end
)cat";

}  // namespace weylcryst::invariants::detail
