// placeholder; replaced by the SVG renderer
