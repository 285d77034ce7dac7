/** Draw-list to SVG serialization. */

import { Figure, Shape } from "./figure.js";

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function shapeToSvg(shape: Shape): string {
  switch (shape.kind) {
    case "rect":
      return `<rect x="${shape.x}" y="${shape.y}" width="${shape.w}" height="${shape.h}" fill="${shape.fill}"/>`;
    case "polyline": {
      const pts = shape.points.map(([x, y]) => `${round(x)},${round(y)}`).join(" ");
      return `<polyline points="${pts}" fill="none" stroke="${shape.color}" stroke-width="${shape.width}"/>`;
    }
    case "text": {
      const anchor =
        shape.anchor === "start" ? "start" : shape.anchor === "end" ? "end" : "middle";
      return (
        `<text x="${round(shape.x)}" y="${round(shape.y)}" font-size="${shape.size}" ` +
        `font-family="Helvetica, Arial, sans-serif" fill="${shape.color}" ` +
        `text-anchor="${anchor}">${esc(shape.text)}</text>`
      );
    }
  }
}

function round(v: number): number {
  return Math.round(v * 100) / 100;
}

export function figureToSvg(figure: Figure): string {
  const body = figure.shapes.map(shapeToSvg).join("\n  ");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${figure.width}" ` +
    `height="${figure.height}" viewBox="0 0 ${figure.width} ${figure.height}">\n  ` +
    body +
    "\n</svg>\n"
  );
}
