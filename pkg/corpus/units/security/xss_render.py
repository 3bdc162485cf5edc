"""Profile page rendered by string concatenation."""


def profile_page(request):
    nick = request.args.get("nick")
    body = "<h1>Hello " + nick + "</h1>"
    return render_html(body)


def about_page():
    return render_html("<p>About us</p>")
