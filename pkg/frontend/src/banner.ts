/** Dismissible error banner for load failures (unknown scenario, etc.). */

export function errorBanner(message: string): HTMLElement {
  const banner = document.createElement("div");
  banner.className = "banner error dismissible";
  banner.dataset.testid = "error-banner";
  const text = document.createElement("span");
  text.textContent = message;
  const close = document.createElement("button");
  close.type = "button";
  close.textContent = "×";
  close.setAttribute("aria-label", "dismiss");
  close.addEventListener("click", () => banner.remove());
  banner.append(text, close);
  return banner;
}
