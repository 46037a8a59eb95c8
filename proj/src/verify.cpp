// placeholder; replaced by the verification suites
