#pragma once

namespace gst {

// Entry point for the `gst` tool.  Returns the process exit code:
//   0 success, 1 verification failures, 2 bad arguments/spec,
//   3 numerical failure, 4 imaginary residue above the gate.
int run_cli(int argc, char** argv);

}  // namespace gst
