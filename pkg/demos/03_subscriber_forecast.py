"""Subscriber forecast: population down to LTE subscribers, then growth.

Every stage rounds to whole subscribers with ties toward zero before feeding
the next stage, and growth compounds annually on the LTE base.
"""

from fiberplan import forecast_subscribers, project_growth
from fiberplan.traffic import TrafficInput


def main() -> None:
    inputs = TrafficInput(
        population=850221,
        cellular_penetration=1.5,
        operator_share=0.42,
        lte_penetration=0.2,
        annual_growth=0.051,
        horizon=5,
    )
    forecast = forecast_subscribers(inputs)

    rows = [
        ("population", inputs.population),
        (f"x {inputs.cellular_penetration:g} cellular penetration", forecast.mobile_subscribers),
        (f"x {inputs.operator_share:g} operator share", forecast.operator_subscribers),
        (f"x {inputs.lte_penetration:g} LTE penetration", forecast.lte_subscribers),
        (f"{inputs.horizon} years at {inputs.annual_growth:.1%} growth", forecast.projected_subscribers),
    ]
    print("Derivation chain:")
    for label, value in rows:
        print(f"  {label:<28} {value:>12,d}")

    print("\nYear-by-year projection of the LTE base:")
    for year in range(inputs.horizon + 1):
        print(f"  year {year}: {project_growth(forecast.lte_subscribers, inputs.annual_growth, year):>9,d}")

    print("\nSensitivity to the growth assumption at the 5-year horizon:")
    for rate in (0.03, 0.051, 0.08, 0.12):
        print(f"  {rate:>5.1%} -> {project_growth(forecast.lte_subscribers, rate, 5):>9,d}")


if __name__ == "__main__":
    main()
