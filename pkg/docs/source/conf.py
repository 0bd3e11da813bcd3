import os
import sys

sys.path.insert(0, os.path.abspath('../..'))
extensions = [
    'sphinx_click',
]
project = 'psneg'
html_title = 'psneg'
html_theme = 'furo'
html_theme_options = {
    "light_css_variables": {
        "color-brand-primary": "#1a4f88",
        "color-brand-content": "#1a4f88",
    },
    "dark_css_variables": {
        "color-brand-primary": "#8dbaeb",
        "color-brand-content": "#8dbaeb",
    },
}
